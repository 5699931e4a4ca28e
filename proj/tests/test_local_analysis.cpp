#include <doctest.h>

#include "fuchsmon/local_analysis.hpp"

using namespace fuchsmon;

namespace {

const char* OP33 =
    "T^2*(T-1)^2 - 1/8*t*T^2*(20*T^2+3) + 1/16*t^2*(8*T^2+8*T+3)*(2*T+1)^2"
    " - 1/32*t^3*(2*T+3)^2*(2*T+1)^2";

const char* OP266 =
    "T*(T-1)*(T-1/2)^2 + 1/4*t*T*(44*T^3-48*T^2+37*T-6)"
    " + t^2*(50*T^4-56*T^3+40*T^2-5/2*T+3/8)"
    " + t^3*(120*T^4-288*T^3-75*T^2-105*T-21)"
    " + t^4*(112*T^4-1008*T^3-718*T^2-720*T-303/2)"
    " + t^5*(-224*T^4-2464*T^3-1924*T^2-1628*T-324)"
    " + t^6*(-960*T^4-4224*T^3-4296*T^2-2448*T-450)"
    " + t^7*(-1600*T^4-4992*T^3-6368*T^2-3504*T-696)"
    " - 32*t^8*(2*T+1)*(22*T^3+57*T^2+59*T+21)"
    " - 128*t^9*(2*T+3)*(2*T+1)*(T+1)^2";

Rational canon(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

ExponentList exps(long a0, long a1, long a2, long a3, long den) {
    return {canon(a0, den), canon(a1, den), canon(a2, den), canon(a3, den)};
}

}  // namespace

TEST_CASE("exponents of operator 33 match its table") {
    ThetaOperator op = parse_operator(OP33);
    CHECK(indicial_exponents(op, SingularPoint::rational(0)) == exps(0, 0, 1, 1, 1));
    CHECK(indicial_exponents(op, SingularPoint::rational(1)) == exps(0, 1, 1, 2, 2));
    CHECK(indicial_exponents(op, SingularPoint::rational(2)) == exps(0, 1, 1, 2, 1));
    CHECK(indicial_exponents(op, SingularPoint::infinity()) == exps(1, 1, 3, 3, 2));
    CHECK(indicial_exponents(parse_operator("T^4"), SingularPoint::rational(0)) == exps(0, 0, 0, 0, 1));
}

TEST_CASE("classification table") {
    CHECK(classify(exps(0, 1, 1, 2, 2)).str() == "C(2)");
    CHECK(classify(exps(0, 1, 1, 2, 1)).str() == "C(1)");
    CHECK(classify(exps(0, 0, 0, 0, 1)).str() == "MUM");
    CHECK(classify(exps(0, 1, 2, 3, 1)).str() == "Ordinary");
    CHECK(classify(exps(1, 2, 3, 4, 1)).str() == "Ordinary");
    CHECK(classify(exps(0, 0, 1, 1, 1)).str() == "K(1)");
    CHECK(classify(exps(1, 1, 3, 3, 2)).str() == "K(1)");
    CHECK(classify(exps(0, 1, 3, 4, 1)).str() == "Apparent");
    CHECK(classify(exps(0, 1, 3, 4, 4)).type == SingularityKind::Type::F);
    CHECK(classify(exps(0, 1, 3, 4, 4)).n1 == 4);

    // shift invariance
    auto base = exps(0, 1, 1, 2, 2);
    ExponentList shifted = base;
    for (auto& x : shifted) x += Rational(7, 3);
    CHECK(classify(shifted) == classify(base));

    CHECK_THROWS_AS(classify(exps(0, 0, 1, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(classify(exps(0, 1, 1, 3, 1)), std::invalid_argument);
}

TEST_CASE("riemann symbol of operator 33") {
    RiemannSymbol rs = riemann_symbol(parse_operator(OP33));
    REQUIRE(rs.entries.size() == 4);
    CHECK(rs.entries[0].point.r == 0);
    CHECK(rs.entries[0].kind.str() == "K(1)");
    CHECK(rs.entries[1].kind.str() == "C(2)");
    CHECK(rs.entries[2].kind.str() == "C(1)");
    CHECK(rs.entries[3].point.is_infinity());
    CHECK(rs.entries[3].kind.str() == "K(1)");
    CHECK(fuchs_defect(rs) == -12);
}

TEST_CASE("operator 266 has apparent quadratic points") {
    ThetaOperator op = parse_operator(OP266);
    auto locus = singular_locus(op);
    REQUIRE(locus.size() == 8);
    CHECK(locus[0].r == -1);
    CHECK(locus[1].r == Rational(-1, 2));
    CHECK(locus[2].r == Rational(-1, 4));
    CHECK(locus[3].r == 0);
    CHECK(locus[4].r == Rational(1, 2));
    REQUIRE(locus[5].is_quadratic());
    REQUIRE(locus[6].is_quadratic());
    CHECK(locus[7].is_infinity());

    Poly mp(std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
    CHECK(locus[5].min_poly == mp);
    CHECK(indicial_exponents(op, locus[5]) == exps(0, 1, 3, 4, 1));
    CHECK(indicial_exponents(op, locus[6]) == exps(0, 1, 3, 4, 1));
    CHECK(classify(indicial_exponents(op, locus[5])).str() == "Apparent");

    CHECK(indicial_exponents(op, SingularPoint::rational(0)) == exps(0, 1, 1, 2, 2));
    CHECK(indicial_exponents(op, SingularPoint::infinity()) == exps(1, 2, 2, 3, 2));

    CHECK(fuchs_defect(riemann_symbol(op)) == -12);
}

TEST_CASE("expected jordan forms") {
    auto c2 = expected_local_jordan(classify(exps(0, 1, 1, 2, 2)), exps(0, 1, 1, 2, 2));
    CHECK(c2[0][0] == Rational(0));
    CHECK(c2[1][1] == Rational(1, 2));
    CHECK(c2[2][2] == Rational(1, 2));
    CHECK(c2[1][2] == Rational(0));
    CHECK(c2[3][3] == Rational(0));
    CHECK_FALSE(c2[0][1].has_value());

    auto mum = expected_local_jordan(classify(exps(0, 0, 0, 0, 1)), exps(0, 0, 0, 0, 1));
    for (int i = 0; i < 4; ++i) CHECK(mum[i][i] == Rational(0));
    for (int i = 0; i < 3; ++i) CHECK(mum[i][i + 1] == Rational(0));
    CHECK_FALSE(mum[0][2].has_value());

    auto k1 = expected_local_jordan(classify(exps(1, 1, 3, 3, 2)), exps(1, 1, 3, 3, 2));
    CHECK(k1[0][0] == Rational(1, 2));
    CHECK(k1[2][2] == Rational(1, 2));
    CHECK(k1[0][1] == Rational(0));
    CHECK(k1[2][3] == Rational(0));
    CHECK_FALSE(k1[1][2].has_value());

    CHECK_THROWS_AS(expected_local_jordan(classify(exps(0, 1, 2, 3, 1)), exps(0, 1, 2, 3, 1)),
                    std::invalid_argument);
}

TEST_CASE("irregular operators are rejected") {
    // t*T^4 + 1 has indicial degree 0 at t=0
    CHECK_THROWS_AS(indicial_exponents(parse_operator("t*T^4 + 1"), SingularPoint::rational(0)),
                    std::domain_error);
}
