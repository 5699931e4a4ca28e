#include "fuchsmon/symplectic.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace fuchsmon {

std::string word_str(const Word& w) {
    std::string out;
    for (const auto& f : w) {
        if (!out.empty()) out += ' ';
        out += "M_" + f.label;
        if (f.power != 1) out += "^" + std::to_string(f.power);
    }
    return out.empty() ? "(empty word)" : out;
}

WordFactor parse_word_factor(const std::string& token) {
    if (token.size() < 3 || token.compare(0, 2, "M_") != 0)
        throw std::invalid_argument("word factor must look like M_<label>[^<power>]: " + token);
    WordFactor f;
    auto caret = token.find('^');
    if (caret == std::string::npos) {
        f.label = token.substr(2);
    } else {
        f.label = token.substr(2, caret - 2);
        std::size_t used = 0;
        f.power = std::stol(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1)
            throw std::invalid_argument("bad exponent in word factor: " + token);
    }
    if (f.label.empty()) throw std::invalid_argument("empty label in word factor: " + token);
    return f;
}

QMat4 evaluate_word(const GeneratorMap& gens, const Word& w) {
    QMat4 p = QMat4::identity();
    for (const auto& f : w) {
        auto it = gens.find(f.label);
        if (it == gens.end())
            throw std::invalid_argument("evaluate_word: unknown generator M_" + f.label);
        p = p * it->second.pow(f.power);
    }
    return p;
}

namespace {

// Strict upper triangle slots of a skew 4x4 matrix, row-major.
constexpr std::array<std::pair<int, int>, 6> kSkewSlots = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Rational pair_with(const QMat4& s, const QVec4& x, const QVec4& y) {
    Rational acc(0);
    for (int i = 0; i < 4; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < 4; ++j) acc += x[i] * s(i, j) * y[j];
    }
    return acc;
}

QVec4 combine(const QVec4& w, const Rational& cu, const QVec4& u, const Rational& cv,
              const QVec4& v) {
    QVec4 r;
    for (int i = 0; i < 4; ++i) r[i] = w[i] + cu * u[i] + cv * v[i];
    return r;
}

bool vec_zero(const QVec4& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

InvariantFormResult invariant_form(const std::vector<QMat4>& gens) {
    if (gens.empty()) throw std::invalid_argument("invariant_form: no generators");
    // Stack the 16 entries of M^T S M - S = 0 per generator; unknowns are the
    // six strict upper entries of S.
    RatMat sys(16 * gens.size(), 6);
    std::size_t row = 0;
    for (const QMat4& m : gens) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b, ++row)
                for (int u = 0; u < 6; ++u) {
                    auto [i, j] = kSkewSlots[u];
                    Rational c = m(i, a) * m(j, b) - m(j, a) * m(i, b);
                    if (a == i && b == j) c -= 1;
                    if (a == j && b == i) c += 1;
                    sys.at(row, u) = c;
                }
    }
    auto basis = sys.nullspace();
    InvariantFormResult res;
    res.nullity = static_cast<int>(basis.size());
    if (res.nullity == 1) {
        auto prim = primitive_integer(basis[0]);
        for (int u = 0; u < 6; ++u) {
            auto [i, j] = kSkewSlots[u];
            res.form(i, j) = Rational(prim[u]);
            res.form(j, i) = -Rational(prim[u]);
        }
    }
    return res;
}

QMat4 symplectic_transition(const QMat4& s) {
    if (!(s.transpose() == Rational(-1) * s))
        throw std::invalid_argument("symplectic_transition: form is not skew-symmetric");

    std::array<QVec4, 4> e;
    for (int i = 0; i < 4; ++i) {
        e[i] = QVec4{Rational(0), Rational(0), Rational(0), Rational(0)};
        e[i][i] = 1;
    }

    // First hyperbolic pair: u1 = e0, v1 = first basis vector pairing
    // nontrivially with it, scaled so omega(u1, v1) = 1.
    QVec4 u1 = e[0];
    QVec4 v1;
    std::vector<QVec4> rest;
    bool found = false;
    for (int j = 1; j < 4; ++j) {
        Rational w = pair_with(s, u1, e[j]);
        if (!found && w != 0) {
            found = true;
            for (int i = 0; i < 4; ++i) v1[i] = e[j][i] / w;
        } else {
            rest.push_back(e[j]);
        }
    }
    if (!found) throw std::invalid_argument("symplectic_transition: degenerate form");

    // Project the two leftover vectors onto the omega-complement of the pair.
    std::array<QVec4, 2> c;
    for (int k = 0; k < 2; ++k)
        c[k] = combine(rest[k], pair_with(s, v1, rest[k]), u1, -pair_with(s, u1, rest[k]), v1);

    QVec4 u2 = c[0];
    Rational w2 = pair_with(s, u2, c[1]);
    if (vec_zero(u2) || w2 == 0)
        throw std::invalid_argument("symplectic_transition: degenerate form");
    QVec4 v2;
    for (int i = 0; i < 4; ++i) v2[i] = c[1][i] / w2;

    QMat4 t;
    for (int i = 0; i < 4; ++i) {
        t(i, 0) = u1[i];
        t(i, 1) = u2[i];
        t(i, 2) = v1[i];
        t(i, 3) = v2[i];
    }
    if (!(t.transpose() * s * t == standard_omega()))
        throw std::logic_error("symplectic_transition: normalization check failed");
    return t;
}

std::vector<QMat4> realize_subgroup(const GeneratorMap& gens, const SubgroupSpec& spec,
                                    const QMat4& t) {
    const QMat4 tinv = t.inverse();
    const QMat4 omega = standard_omega();
    std::vector<QMat4> out;
    out.reserve(spec.generators.size());
    for (const Word& w : spec.generators) {
        if (w.empty()) throw std::invalid_argument("realize_subgroup: empty generator word");
        QMat4 x = tinv * evaluate_word(gens, w) * t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (x(i, j).get_den() != 1)
                    throw std::domain_error("realize_subgroup: entry (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ") of realized " +
                                            word_str(w) + " is not integral: " +
                                            to_string(x(i, j)));
        if (!(x.transpose() * omega * x == omega))
            throw std::domain_error("realize_subgroup: realized " + word_str(w) +
                                    " does not preserve the standard form");
        out.push_back(x);
    }
    return out;
}

std::optional<QMat4> integral_rescale(const GeneratorMap& gens, const SubgroupSpec& spec,
                                      const QMat4& t, long max_power) {
    std::vector<Rational> scales;
    for (long k = 0; k <= max_power; ++k) {
        Rational two_k(Integer(1) << k);
        scales.push_back(two_k);
        if (k > 0) scales.push_back(1 / two_k);
    }
    std::vector<Rational> signed_scales;
    for (const auto& a : scales) {
        signed_scales.push_back(a);
        signed_scales.push_back(-a);
    }
    for (const auto& a : signed_scales)
        for (const auto& b : signed_scales) {
            QMat4 d;
            d(0, 0) = a;
            d(1, 1) = b;
            d(2, 2) = 1 / a;
            d(3, 3) = 1 / b;
            QMat4 cand = t * d;
            try {
                realize_subgroup(gens, spec, cand);
                return cand;
            } catch (const std::domain_error&) {
            }
        }
    return std::nullopt;
}

std::optional<Integer> conifold_reflection_form(const QMat4& m, const QVec4& f) {
    const QMat4 omega = standard_omega();
    // pairing[j] = omega(f, e_j)
    QVec4 pairing{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) pairing[j] += f[i] * omega(i, j);

    const QMat4 n = m - QMat4::identity();
    std::optional<Rational> d;
    for (int j = 0; j < 4; ++j) {
        QVec4 col;
        for (int i = 0; i < 4; ++i) col[i] = n(i, j);
        if (pairing[j] == 0) {
            if (!vec_zero(col)) return std::nullopt;
            continue;
        }
        // col must equal (d * pairing[j]) * f
        if (vec_zero(col)) {
            if (d && *d != 0) return std::nullopt;
            d = Rational(0);
            continue;
        }
        if (vec_zero(f)) return std::nullopt;
        int lead = 0;
        while (f[lead] == 0) ++lead;
        Rational ratio = col[lead] / f[lead];
        for (int i = 0; i < 4; ++i)
            if (col[i] != ratio * f[i]) return std::nullopt;
        Rational dj = ratio / pairing[j];
        if (d && *d != dj) return std::nullopt;
        d = dj;
    }
    if (!d) d = Rational(0);  // m == Id and f pairs trivially with everything
    if (denom(*d) != 1) return std::nullopt;
    return numer(*d);
}

}  // namespace fuchsmon
