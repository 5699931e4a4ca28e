#include <doctest.h>

#include "fuchsmon/local_analysis.hpp"
#include "fuchsmon/theta_op.hpp"

#include <random>

using namespace fuchsmon;

namespace {

const char* OP33 =
    "T^2*(T-1)^2 - 1/8*t*T^2*(20*T^2+3) + 1/16*t^2*(8*T^2+8*T+3)*(2*T+1)^2"
    " - 1/32*t^3*(2*T+3)^2*(2*T+1)^2";

std::vector<Rational> locus_rationals(const ThetaOperator& op) {
    std::vector<Rational> out;
    for (const auto& p : singular_locus(op))
        if (p.is_rational()) out.push_back(p.r);
    return out;
}

}  // namespace

TEST_CASE("euler operator commutation") {
    OpPoly T = OpPoly::theta(), t = OpPoly::variable();
    CHECK(T * t == t * T + t);
    CHECK(T * T * t == t * T * T + OpPoly::constant(2) * t * T + t);
    // (T*t)*t == T*t^2 in both association orders
    CHECK((T * t) * t == T * (t * t));
}

TEST_CASE("parser collects by T-degree") {
    ThetaOperator four = parse_operator("T^4");
    CHECK(four.q(4) == Poly(Rational(1)));
    for (int i = 0; i < 4; ++i) CHECK(four.q(i).is_zero());

    ThetaOperator op = parse_operator("(t+1)*T^4 + t");
    CHECK(op.q(4) == Poly(std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK(op.q(0) == Poly::t_power(1));
    CHECK(op.q(3).is_zero());
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_AS(parse_operator("T^3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("T^5 + T^4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("T^4 + x"), ParseError);
    CHECK_THROWS_AS(parse_operator("T^4 + (t"), ParseError);
    CHECK_THROWS_AS(parse_operator("T^4 / t"), ParseError);
    CHECK_THROWS_AS(parse_operator("T^4 ^ t"), ParseError);
    try {
        parse_operator("T^4 + &");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("canonical print round-trips") {
    for (const char* text : {OP33, "T^4", "(t+1)*T^4 + t", "2*T^4 - T^2 + 1/2*t"}) {
        ThetaOperator op = parse_operator(text);
        std::string printed = print_operator(op);
        CHECK(parse_operator(printed) == op);
        CHECK(print_operator(parse_operator(printed)) == printed);
    }
}

TEST_CASE("operator 33 singular locus") {
    ThetaOperator op = parse_operator(OP33);
    auto pts = locus_rationals(op);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == 0);
    CHECK(pts[1] == 1);
    CHECK(pts[2] == 2);
    CHECK(singular_locus(op).back().is_infinity());
}

TEST_CASE("theta-power operator is singular at 0 and infinity") {
    auto locus = singular_locus(parse_operator("T^4"));
    REQUIRE(locus.size() == 2);
    CHECK(locus[0].r == 0);
    CHECK(locus[1].is_infinity());
}

TEST_CASE("moebius transport of the locus") {
    ThetaOperator op = parse_operator(OP33);
    ThetaOperator same = apply_moebius(op, 1, 0, 0, 1);
    CHECK(same == op);

    // t -> 2 - t fixes the locus {0,1,2,oo} as a set
    ThetaOperator flipped = apply_moebius(op, -1, 2, 0, 1);
    auto pts = locus_rationals(flipped);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == 0);
    CHECK(pts[1] == 1);
    CHECK(pts[2] == 2);

    // t -> t/(t-1) sends 2 to 2, 0 to 0, 1 to oo, oo to 1
    ThetaOperator cross = apply_moebius(op, 1, 0, 1, -1);
    auto xs = locus_rationals(cross);
    REQUIRE(xs.size() == 3);
    CHECK(xs[0] == 0);
    CHECK(xs[1] == 1);
    CHECK(xs[2] == 2);
    CHECK_THROWS_AS(apply_moebius(op, 1, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("moebius round-trips on random maps") {
    ThetaOperator op = parse_operator("(t+1)*T^4 + t*T + 1");
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(-4, 4);
    int done = 0;
    while (done < 50) {
        Rational a(pick(rng)), b(pick(rng)), c(pick(rng)), d(pick(rng));
        if (a * d - b * c == 0) continue;
        ThetaOperator fwd = apply_moebius(op, a, b, c, d);
        ThetaOperator back = apply_moebius(fwd, d, -b, -c, a);
        CHECK(back == op);
        ++done;
    }
}

TEST_CASE("exponent shifts compose and move the exponents at 0") {
    ThetaOperator op = parse_operator(OP33);
    CHECK(shift_exponents(op, 0) == op);
    ThetaOperator s1 = shift_exponents(op, Rational(1, 3));
    ThetaOperator s2 = shift_exponents(s1, Rational(2, 3));
    CHECK(s2 == shift_exponents(op, 1));

    ExponentList e = indicial_exponents(shift_exponents(op, 1), SingularPoint::rational(0));
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == 2);
    CHECK(e[3] == 2);

    // exponents at other finite points are untouched
    ExponentList at2 = indicial_exponents(shift_exponents(op, Rational(1, 2)), SingularPoint::rational(2));
    CHECK(at2 == indicial_exponents(op, SingularPoint::rational(2)));
}

TEST_CASE("derivative form of the euler power") {
    auto a = d_form(parse_operator("T^4"));
    CHECK(a[0].is_zero());
    CHECK(a[1] == Poly::t_power(1));
    CHECK(a[2] == Poly::t_power(2, Rational(7)));
    CHECK(a[3] == Poly::t_power(3, Rational(6)));
    CHECK(a[4] == Poly::t_power(4));
}

TEST_CASE("polynomial root extraction") {
    // (t-1)^2 * (2t+3) * (4t^2+2t+1)
    Poly p = Poly(std::vector<Rational>{Rational(-1), Rational(1)});
    p = p * p;
    p = p * Poly(std::vector<Rational>{Rational(3), Rational(2)});
    Poly quad(std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
    p = p * quad;

    auto split = split_rational_roots(p);
    REQUIRE(split.roots.size() == 2);
    CHECK(split.roots[0].first == 1);
    CHECK(split.roots[0].second == 2);
    CHECK(split.roots[1].first == Rational(-3, 2));

    auto roots = polynomial_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].r == Rational(-3, 2));
    CHECK(roots[1].r == 1);
    CHECK(roots[2].is_quadratic());
    CHECK(roots[2].q == QuadExt(Rational(-1, 4), Rational(-1, 4), Rational(-3)));
    CHECK(roots[3].q == QuadExt(Rational(-1, 4), Rational(1, 4), Rational(-3)));
    CHECK(roots[3].min_poly == quad);

    CHECK_THROWS_AS(polynomial_roots(Poly(std::vector<Rational>{Rational(2), Rational(0), Rational(0), Rational(1)})),
                    std::domain_error);
}
