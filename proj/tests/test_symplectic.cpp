#include <doctest.h>

#include <random>

#include "fuchsmon/symplectic.hpp"

using namespace fuchsmon;

namespace {

QMat4 mat(const std::array<std::array<long, 4>, 4>& rows) {
    QMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

// The four integral symplectic generators of one dense monodromy group,
// used as a known-good Sp(4,Z) generating set.
std::vector<QMat4> dense_sp4_gens() {
    return {
        mat({{{1, 0, 0, 0}, {0, 1, 0, 8}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
        mat({{{-1, 0, 0, 0}, {0, 1, 0, 4}, {-2, 0, -1, 0}, {0, -1, 0, -3}}}),
        mat({{{1, -2, -8, 12}, {-6, -5, -12, 0}, {2, 3, 9, -6}, {1, 2, 6, -5}}}),
        mat({{{5, 4, 4, 8}, {8, 9, 8, 16}, {-4, -4, -3, -8}, {-4, -4, -4, -7}}}),
    };
}

}  // namespace

TEST_CASE("word factor parsing and formatting") {
    WordFactor f = parse_word_factor("M_-1/2^-1");
    CHECK(f.label == "-1/2");
    CHECK(f.power == -1);
    CHECK(parse_word_factor("M_oo").power == 1);
    CHECK(parse_word_factor("M_oo^2").label == "oo");
    CHECK_THROWS_AS(parse_word_factor("N_0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_factor("M_"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_factor("M_0^x"), std::invalid_argument);

    Word w = {{"2", 1}, {"0", 1}, {"1", -1}};
    CHECK(word_str(w) == "M_2 M_0 M_1^-1");
}

TEST_CASE("evaluate_word multiplies powers left to right") {
    GeneratorMap gens;
    QMat4 a = QMat4::identity();
    a(0, 1) = 1;  // shear
    QMat4 b = QMat4::identity();
    b(2, 3) = 1;
    gens["a"] = a;
    gens["b"] = b;

    QMat4 p = evaluate_word(gens, {{"a", 2}, {"b", -1}});
    CHECK(p(0, 1) == 2);
    CHECK(p(2, 3) == -1);
    CHECK_THROWS_AS(evaluate_word(gens, {{"c", 1}}), std::invalid_argument);
}

TEST_CASE("invariant_form of the identity alone is the whole skew space") {
    auto res = invariant_form({QMat4::identity()});
    CHECK(res.nullity == 6);
}

TEST_CASE("invariant_form of a dense symplectic set is the standard form") {
    auto res = invariant_form(dense_sp4_gens());
    REQUIRE(res.nullity == 1);
    CHECK(res.form == standard_omega());
    for (const QMat4& m : dense_sp4_gens())
        CHECK(m.transpose() * res.form * m == res.form);
}

TEST_CASE("symplectic_transition normalizes the standard form to itself") {
    CHECK(symplectic_transition(standard_omega()) == QMat4::identity());
}

TEST_CASE("symplectic_transition rescales a multiple of the standard form") {
    QMat4 s = Rational(2) * standard_omega();
    QMat4 t = symplectic_transition(s);
    CHECK(t.transpose() * s * t == standard_omega());
    CHECK(t(0, 0) == 1);
    CHECK(t(2, 2) == Rational(1, 2));
}

TEST_CASE("symplectic_transition handles random nondegenerate skew forms") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-5, 5);
    int done = 0;
    while (done < 25) {
        QMat4 s;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                s(i, j) = entry(rng);
                s(j, i) = -s(i, j);
            }
        if (s.det() == 0) continue;
        QMat4 t = symplectic_transition(s);
        CHECK(t.transpose() * s * t == standard_omega());
        ++done;
    }
}

TEST_CASE("symplectic_transition rejects non-skew and degenerate input") {
    CHECK_THROWS_AS(symplectic_transition(QMat4::identity()), std::invalid_argument);
    QMat4 s;  // skew but rank 2: only the (0,1) plane pairs
    s(0, 1) = 1;
    s(1, 0) = -1;
    CHECK_THROWS_AS(symplectic_transition(s), std::invalid_argument);
}

TEST_CASE("realize_subgroup conjugates and validates") {
    GeneratorMap gens;
    auto sp = dense_sp4_gens();
    gens["0"] = sp[0];
    gens["1"] = sp[1];

    SubgroupSpec spec;
    spec.generators = {{{"0", 1}}, {{"1", 2}}, {{"0", 1}, {"1", -1}}};
    auto out = realize_subgroup(gens, spec, QMat4::identity());
    REQUIRE(out.size() == 3);
    CHECK(out[0] == sp[0]);
    CHECK(out[1] == sp[1] * sp[1]);
    CHECK(out[2] == sp[0] * sp[1].inverse());
    for (const auto& m : out) CHECK(is_symplectic(m));
}

TEST_CASE("realize_subgroup rejects non-symplectic generators under T = Id") {
    GeneratorMap gens;
    QMat4 m = QMat4::identity();
    m(0, 0) = 2;
    m(1, 1) = Rational(1, 2);  // determinant 1 but not symplectic, not integral
    gens["0"] = m;
    SubgroupSpec spec;
    spec.generators = {{{"0", 1}}};
    CHECK_THROWS_AS(realize_subgroup(gens, spec, QMat4::identity()), std::domain_error);
}

TEST_CASE("integral_rescale repairs a diagonal denominator") {
    GeneratorMap gens;
    auto sp = dense_sp4_gens();
    gens["0"] = sp[0];
    gens["1"] = sp[3];
    SubgroupSpec spec;
    spec.generators = {{{"0", 1}}, {{"1", 1}}};

    // Spoil a perfectly good transition by a symplectic diagonal; the search
    // must find some diagonal making the realization integral again.
    QMat4 d;
    d(0, 0) = Rational(1, 4);
    d(1, 1) = 2;
    d(2, 2) = 4;
    d(3, 3) = Rational(1, 2);
    QMat4 spoiled = QMat4::identity() * d;
    CHECK_THROWS_AS(realize_subgroup(gens, spec, spoiled), std::domain_error);

    auto fixed = integral_rescale(gens, spec, spoiled, 4);
    REQUIRE(fixed.has_value());
    auto out = realize_subgroup(gens, spec, *fixed);
    CHECK(out.size() == 2);
}

TEST_CASE("conifold_reflection_form reads off the reflection constant") {
    QMat4 m = QMat4::identity();
    m(1, 3) = 8;
    QVec4 f{Rational(0), Rational(1), Rational(0), Rational(0)};
    auto d = conifold_reflection_form(m, f);
    REQUIRE(d.has_value());
    CHECK(*d == 8);

    CHECK(conifold_reflection_form(QMat4::identity(), f) == Integer(0));

    // rank(M - Id) = 2 cannot be a reflection
    QMat4 two = QMat4::identity();
    two(0, 2) = 1;
    two(1, 3) = 1;
    CHECK_FALSE(conifold_reflection_form(two, f).has_value());

    // non-integer constant is rejected
    QMat4 half = QMat4::identity();
    half(1, 3) = Rational(1, 2);
    CHECK_FALSE(conifold_reflection_form(half, f).has_value());

    // wrong axis vector is rejected
    QVec4 g{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK_FALSE(conifold_reflection_form(m, g).has_value());
}
