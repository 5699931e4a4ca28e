#include "fuchsmon/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fuchsmon/catalog.hpp"
#include "fuchsmon/poly.hpp"

namespace fuchsmon {

namespace {

// Cyclotomic polynomials of degree at most 4, ascending coefficients.
const std::vector<std::pair<long, std::vector<long>>>& cyclotomics() {
    static const std::vector<std::pair<long, std::vector<long>>> table = {
        {1, {-1, 1}},          {2, {1, 1}},          {3, {1, 1, 1}},
        {4, {1, 0, 1}},        {5, {1, 1, 1, 1, 1}}, {6, {1, -1, 1}},
        {8, {1, 0, 0, 0, 1}},  {10, {1, -1, 1, -1, 1}},
        {12, {1, 0, -1, 0, 1}},
    };
    return table;
}

Poly poly_of(const std::vector<long>& coef) {
    std::vector<Rational> v;
    v.reserve(coef.size());
    for (long c : coef) v.emplace_back(c);
    return Poly(std::move(v));
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

UnipotencyData unipotency(const QMat4& m) {
    Poly p = m.charpoly();
    UnipotencyData out;
    out.k = 1;
    for (const auto& [n, coef] : cyclotomics()) {
        Poly phi = poly_of(coef);
        for (;;) {
            auto [q, r] = p.divrem(phi);
            if (!r.is_zero()) break;
            p = q;
            out.k = lcm_long(out.k, n);
            if (p.degree() == 0) break;
        }
    }
    if (p.degree() != 0)
        throw std::domain_error(
            "matrix is not quasi-unipotent: characteristic polynomial has a "
            "non-cyclotomic factor");
    QMat4 u = m.pow(out.k) - QMat4::identity();
    QMat4 acc = QMat4::identity();
    for (int n = 1; n <= 4; ++n) {
        acc = acc * u;
        if (acc.is_zero()) {
            out.nilpotency_index = n;
            return out;
        }
    }
    throw std::logic_error("quasi-unipotent matrix with non-nilpotent M^k - Id");
}

bool is_mum(const QMat4& m) {
    QMat4 u = m - QMat4::identity();
    QMat4 u2 = u * u;
    return (u2 * u2).is_zero() && !(u2 * u).is_zero();
}

QMat4 mum_power_formula(long k) {
    if (k < 0) throw std::invalid_argument("mum_power_formula needs k >= 0");
    Integer kk(k);
    Integer c2 = kk * (kk - 1) / 2;
    Integer c3 = kk * (kk - 1) * (kk - 2) / 6;
    QMat4 m = QMat4::identity();
    m(0, 1) = Rational(kk);
    m(1, 2) = Rational(kk);
    m(2, 3) = Rational(kk);
    m(0, 2) = Rational(c2);
    m(1, 3) = Rational(c2);
    m(0, 3) = Rational(c3);
    return m;
}

namespace {

constexpr std::uint32_t kFilterPrime = 998244353;

bool fp_mum_candidate(const FpMat& w) {
    FpMat u = w;
    for (int i = 0; i < 4; ++i) u.at(i, i) = (u.at(i, i) + kFilterPrime - 1) % kFilterPrime;
    FpMat u2 = fp_mul(u, u);
    FpMat u4 = fp_mul(u2, u2);
    for (auto x : u4.e)
        if (x != 0) return false;
    return true;
}

}  // namespace

std::optional<MumSearchResult> random_mum_search(const GeneratorMap& gens, int max_len,
                                                 long budget, std::uint64_t seed) {
    if (gens.empty()) throw std::invalid_argument("mum search needs at least one generator");
    if (max_len < 1) throw std::invalid_argument("mum search needs max_len >= 1");
    if (budget < 1) throw std::invalid_argument("mum search needs a positive budget");

    std::vector<std::string> labels;
    for (const auto& [l, m] : gens) labels.push_back(l);
    std::vector<FpMat> fwd, bwd;
    for (const auto& l : labels) {
        fwd.push_back(reduce_mod_p(gens.at(l), kFilterPrime));
        bwd.push_back(fp_inverse(fwd.back()));
    }

    // Raw engine draws with explicit modular reduction keep the sampled
    // sequence identical across standard libraries.
    std::mt19937_64 rng(seed);

    for (long trial = 1; trial <= budget; ++trial) {
        int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
        // Free reduction on the fly: adjacent letters with the same label
        // merge, cancellations pop.
        std::vector<std::pair<std::size_t, long>> letters;
        for (int i = 0; i < len; ++i) {
            std::size_t lab = static_cast<std::size_t>(rng() % labels.size());
            long e = (rng() & 1) ? 1 : -1;
            if (!letters.empty() && letters.back().first == lab) {
                letters.back().second += e;
                if (letters.back().second == 0) letters.pop_back();
            } else {
                letters.push_back({lab, e});
            }
        }
        if (letters.empty()) continue;

        FpMat w = fp_identity(kFilterPrime);
        for (const auto& [lab, e] : letters)
            w = fp_mul(w, e > 0 ? fp_pow(fwd[lab], e) : fp_pow(bwd[lab], -e));
        if (!fp_mum_candidate(w)) continue;

        Word word;
        for (const auto& [lab, e] : letters) word.push_back({labels[lab], e});
        QMat4 exact = evaluate_word(gens, word);
        if (is_mum(exact)) return MumSearchResult{std::move(word), exact, trial};
    }
    return std::nullopt;
}

bool verify_witness(const GeneratorMap& gens, const Word& word, long outer_power,
                    const QMat4& expected) {
    return evaluate_word(gens, word).pow(outer_power) == expected && is_mum(expected);
}

FixedSpace common_fixed_space(const std::vector<QMat4>& gens) {
    RatMat stack(4 * std::max<std::size_t>(gens.size(), 1), 4);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        QMat4 u = gens[g] - QMat4::identity();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) stack.at(4 * g + i, j) = u(i, j);
    }
    FixedSpace out;
    out.basis = stack.nullspace();
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

std::vector<UnipotentGenerator> unipotent_subgroup(
    const std::vector<std::pair<std::string, QMat4>>& local_gens) {
    std::vector<UnipotentGenerator> out;
    for (const auto& [label, m] : local_gens) {
        UnipotentGenerator g;
        g.label = label;
        g.k = unipotency(m).k;
        g.power = m.pow(g.k);
        g.trivial = g.power.is_identity();
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<Integer> rank1_image(const QMat4& m, const char* who) {
    QMat4 u = m - QMat4::identity();
    if (u.rank() != 1 || !(u * u).is_zero())
        throw std::domain_error(std::string(who) + " is not rank-1 unipotent");
    // Any nonzero column of M - Id spans the image.
    for (int j = 0; j < 4; ++j) {
        std::vector<Rational> col(4);
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            col[i] = u(i, j);
            if (col[i] != 0) nonzero = true;
        }
        if (nonzero) return primitive_integer(col);
    }
    throw std::logic_error("rank-1 matrix with no nonzero column");
}

// Coefficient c with M v = v + c f, exact; throws when the difference leaves
// the line spanned by f.
Rational line_coefficient(const QMat4& m, const std::vector<Integer>& f,
                          const std::vector<Integer>& v) {
    QVec4 vv;
    for (int i = 0; i < 4; ++i) vv[i] = Rational(v[i]);
    QVec4 w = m * vv;
    Rational c(0);
    bool have = false;
    for (int i = 0; i < 4; ++i) {
        Rational d = w[i] - vv[i];
        if (f[i] == 0) {
            if (d != 0)
                throw std::domain_error("cross action leaves the unipotent image line");
            continue;
        }
        Rational ratio = d / Rational(f[i]);
        if (have && ratio != c)
            throw std::domain_error("cross action leaves the unipotent image line");
        c = ratio;
        have = true;
    }
    return c;
}

}  // namespace

PairingConstants rank1_pairing(const QMat4& m1, const QMat4& m2) {
    PairingConstants out;
    out.f1 = rank1_image(m1, "first matrix");
    out.f2 = rank1_image(m2, "second matrix");

    RatMat pair_mat(4, 2);
    for (int i = 0; i < 4; ++i) {
        pair_mat.at(i, 0) = Rational(out.f1[i]);
        pair_mat.at(i, 1) = Rational(out.f2[i]);
    }
    if (pair_mat.rank() != 2)
        throw std::domain_error("unipotent images are linearly dependent");

    out.raw_a = line_coefficient(m1, out.f1, out.f2);
    out.raw_b = line_coefficient(m2, out.f2, out.f1);
    if (out.raw_a == 0 || out.raw_b == 0)
        throw std::domain_error("degenerate pairing: the matrices commute on the image lines");
    Rational prod = out.raw_a * out.raw_b;
    if (denom(prod) != 1)
        throw std::domain_error("pairing product " + to_string(prod) + " is not an integer");
    out.a = 1;
    out.b = numer(prod);
    return out;
}

DensityVerdict density_verdict(const std::vector<QMat4>& gens, std::uint32_t p) {
    if (p < 5) throw std::invalid_argument("density test needs a prime p >= 5");
    for (const auto& m : gens) {
        if (!m.is_integral() || !is_symplectic(m))
            throw std::invalid_argument(
                "density test needs integral generators preserving the standard form");
    }
    std::vector<FpMat> reduced;
    for (const auto& m : gens) reduced.push_back(reduce_mod_p(m, p));
    if (reduced.empty()) return DensityVerdict::Inconclusive;
    return subgroup_order_mod_p(reduced) == sp4_order(p) ? DensityVerdict::Dense
                                                         : DensityVerdict::Inconclusive;
}

std::vector<QMat4> gn_generators(long n) {
    if (n < 1) throw std::invalid_argument("the subgroup family needs n >= 1");
    const AuxiliaryData& aux = auxiliary();
    return {aux.gn_a, aux.gn_b, aux.gn_c(n)};
}

}  // namespace fuchsmon
