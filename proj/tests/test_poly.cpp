#include <doctest.h>

#include "fuchsmon/poly.hpp"
#include "fuchsmon/quad.hpp"
#include "fuchsmon/ratfun.hpp"

using namespace fuchsmon;

TEST_CASE("rational parsing and helpers") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-45/8") == Rational(-45, 8));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(frac_part(Rational(-3, 2)) == Rational(1, 2));
    CHECK(frac_part(Rational(7, 3)) == Rational(1, 3));
    CHECK(pow_rat(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("polynomial arithmetic") {
    Poly p(std::vector<Rational>{Rational(1), Rational(2), Rational(1)});  // 1+2t+t^2
    Poly lin(std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(lin * lin == p);
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == 9);

    auto [q, r] = p.divrem(lin);
    CHECK(q == lin);
    CHECK(r.is_zero());

    CHECK(p.root_multiplicity(Rational(-1)) == 2);
    CHECK(Poly::gcd(p, lin) == lin);
}

TEST_CASE("polynomial shift, compose, reverse, content") {
    Poly p(std::vector<Rational>{Rational(0), Rational(0), Rational(1)});  // t^2
    Poly sh = p.shift(Rational(1));                                        // (t+1)^2
    CHECK(sh[0] == 1);
    CHECK(sh[1] == 2);
    CHECK(sh[2] == 1);

    Poly c = p.compose(Poly(std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK(c == sh);

    Poly r = Poly(std::vector<Rational>{Rational(1), Rational(2)}).reverse(3);  // t^3*(1+2/t)
    CHECK(r[3] == 1);
    CHECK(r[2] == 2);

    Poly g(std::vector<Rational>{Rational(-4, 3), Rational(2, 3)});
    CHECK(g.content() == Rational(2, 3));
    Poly neg(std::vector<Rational>{Rational(4), Rational(-2)});
    CHECK(neg.content() == Rational(-2));
    CHECK(((Rational(1) / neg.content()) * neg).leading() > 0);
}

TEST_CASE("rational functions reduce and differentiate") {
    Poly t = Poly::t_power(1);
    Poly one(Rational(1));
    RatFun f(t * t - one, t - one);  // (t^2-1)/(t-1) = t+1
    CHECK(f.is_polynomial());
    CHECK(f.num() == t + one);

    RatFun g(one, t);  // 1/t
    RatFun th = g.theta();
    CHECK(th == -g);

    RatFun h = RatFun(t) / RatFun(t - one);
    CHECK(h.theta() == RatFun(-t, (t - one) * (t - one)));
}

TEST_CASE("quadratic field elements") {
    // x = (-1 + sqrt(-3))/4 is a root of 4x^2 + 2x + 1.
    QuadExt x(Rational(-1, 4), Rational(1, 4), Rational(-3));
    QuadExt val = QuadExt(Rational(4)) * x * x + QuadExt(Rational(2)) * x + QuadExt(Rational(1));
    CHECK(val.is_zero());
    CHECK(x.norm() == Rational(1, 4));
    CHECK((x * x.conj()).is_rational());
    CHECK((x / x) == QuadExt(Rational(1)));
    QuadExt other(Rational(0), Rational(1), Rational(2));
    CHECK_THROWS_AS(x + other, std::domain_error);
}
