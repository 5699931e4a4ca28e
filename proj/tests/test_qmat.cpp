#include <doctest.h>

#include "fuchsmon/qmat.hpp"

using namespace fuchsmon;

namespace {

QMat4 mat(std::initializer_list<long> v) {
    QMat4 m;
    auto it = v.begin();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Rational(*it++);
    return m;
}

}  // namespace

TEST_CASE("4x4 exact arithmetic") {
    QMat4 a = mat({1, 2, 0, 0, 0, 1, 0, 0, 3, 0, 1, 0, 0, 0, 0, 1});
    QMat4 b = a.inverse();
    CHECK(a * b == QMat4::identity());
    CHECK(b * a == QMat4::identity());
    CHECK(a.det() == 1);
    CHECK(a.pow(3) * a.pow(-3) == QMat4::identity());
    CHECK(a.pow(0) == QMat4::identity());
    CHECK(a.transpose().transpose() == a);
    CHECK(a.trace() == 4);
    CHECK(a.rank() == 4);

    QMat4 d;
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    d(3, 3) = 4;
    Poly cp = d.charpoly();
    // (X-1)(X-2)(X-3)(X-4) = X^4 - 10X^3 + 35X^2 - 50X + 24
    CHECK(cp[4] == 1);
    CHECK(cp[3] == -10);
    CHECK(cp[2] == 35);
    CHECK(cp[1] == -50);
    CHECK(cp[0] == 24);
    CHECK(d.charpoly().eval(Rational(1)) == 0);

    QMat4 n;
    n(0, 1) = 1;
    CHECK(n.rank() == 1);
    CHECK(n.det() == 0);
    CHECK_THROWS_AS(n.inverse(), std::domain_error);
}

TEST_CASE("symplectic form predicates") {
    CHECK(is_symplectic(QMat4::identity()));
    QMat4 t = QMat4::identity();
    t(0, 2) = 5;  // symplectic transvection along e1
    CHECK(is_symplectic(t));
    QMat4 bad = QMat4::identity();
    bad(0, 0) = 2;
    CHECK_FALSE(is_symplectic(bad));
    QMat4 om = standard_omega();
    CHECK(om * om == Rational(-1) * QMat4::identity());
}

TEST_CASE("rational matrix rref and nullspace") {
    RatMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(m.rank() == 1);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        Rational dot = 0;
        for (std::size_t j = 0; j < 3; ++j) dot += m.at(0, j) * v[j];
        CHECK(dot == 0);
    }

    RatMat full(3, 3);
    for (int i = 0; i < 3; ++i) full.at(i, i) = Rational(i + 1);
    full.at(0, 2) = 7;
    CHECK(full.rank() == 3);
    CHECK(full.nullspace().empty());
}

TEST_CASE("primitive integer scaling") {
    std::vector<Rational> v{Rational(1, 2), Rational(-3, 4), Rational(0)};
    auto w = primitive_integer(v);
    CHECK(w[0] == 2);
    CHECK(w[1] == -3);
    CHECK(w[2] == 0);

    std::vector<Rational> neg{Rational(-1, 2), Rational(1, 4)};
    auto nw = primitive_integer(neg);
    CHECK(nw[0] == 2);
    CHECK(nw[1] == -1);

    CHECK_THROWS_AS(primitive_integer(std::vector<Rational>(3, Rational(0))), std::invalid_argument);
}
