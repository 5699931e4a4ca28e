#include "fuchsmon/fp4.hpp"

#include <deque>
#include <stdexcept>

namespace fuchsmon {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on (a, p); p is prime and a is nonzero mod p.
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("value has no inverse mod p");
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace

bool FpMat::is_identity() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (at(i, j) != static_cast<std::uint32_t>(i == j)) return false;
    return true;
}

FpMat fp_identity(std::uint32_t p) {
    FpMat m;
    m.p = p;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
    return m;
}

FpMat fp_mul(const FpMat& a, const FpMat& b) {
    FpMat c;
    c.p = a.p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < 4; ++k)
                s += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            c.at(i, j) = static_cast<std::uint32_t>(s % a.p);
        }
    return c;
}

FpMat fp_inverse(const FpMat& m) {
    const std::uint64_t p = m.p;
    // Augmented [m | Id] elimination.
    std::array<std::array<std::uint64_t, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m.at(i, j);
        a[i][4 + i] = 1;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("matrix is singular mod p");
        std::swap(a[col], a[piv]);
        std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(a[col][col] % p), m.p);
        for (int j = 0; j < 8; ++j) a[col][j] = a[col][j] % p * inv % p;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            std::uint64_t f = a[r][col] % p;
            if (f == 0) continue;
            for (int j = 0; j < 8; ++j) a[r][j] = (a[r][j] + (p - f) * a[col][j]) % p;
        }
    }
    FpMat inv;
    inv.p = m.p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv.at(i, j) = static_cast<std::uint32_t>(a[i][4 + j]);
    return inv;
}

FpMat fp_pow(const FpMat& m, long k) {
    FpMat base = k < 0 ? fp_inverse(m) : m;
    unsigned long n = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    FpMat r = fp_identity(m.p);
    while (n) {
        if (n & 1) r = fp_mul(r, base);
        base = fp_mul(base, base);
        n >>= 1;
    }
    return r;
}

FpMat reduce_mod_p(const QMat4& m, std::uint32_t p) {
    FpMat r;
    r.p = p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Integer num = numer(m(i, j)) % p;
            Integer den = denom(m(i, j)) % p;
            std::uint32_t n = static_cast<std::uint32_t>(Integer((num + p) % p).get_ui());
            std::uint32_t d = static_cast<std::uint32_t>(Integer((den + p) % p).get_ui());
            if (d == 0)
                throw std::domain_error("denominator of entry vanishes mod " + std::to_string(p));
            r.at(i, j) = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(n) * mod_inverse(d, p) % p);
        }
    return r;
}

Integer sp4_order(std::uint32_t p) {
    Integer q(p);
    Integer q2 = q * q;
    Integer q4 = q2 * q2;
    return q4 * (q2 - 1) * (q4 - 1);
}

namespace {

// One level of the stabilizer chain: the orbit of the base vector under the
// generators fixing all earlier bases, with transversal elements mapping the
// base to each orbit point.
struct Level {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> orbit;
    std::vector<FpMat> trans;
    std::vector<FpMat> trans_inv;
    std::vector<std::int32_t> pos;  // point -> orbit index, -1 outside
    std::vector<FpMat> gens;
    std::deque<std::pair<std::size_t, std::size_t>> pending;  // (orbit idx, gen idx)
};

struct Chain {
    std::uint32_t p = 0;
    std::uint32_t space = 0;  // p^4
    std::vector<Level> levels;

    std::uint32_t act(const FpMat& m, std::uint32_t pt) const {
        std::uint32_t v[4], w[4];
        std::uint32_t x = pt;
        for (int i = 0; i < 4; ++i) {
            v[i] = x % p;
            x /= p;
        }
        for (int i = 0; i < 4; ++i) {
            std::uint64_t s = 0;
            for (int j = 0; j < 4; ++j) s += static_cast<std::uint64_t>(m.at(i, j)) * v[j];
            w[i] = static_cast<std::uint32_t>(s % p);
        }
        return w[0] + p * (w[1] + p * (w[2] + p * w[3]));
    }

    void add_orbit_point(Level& lv, std::uint32_t pt, const FpMat& u) {
        lv.pos[pt] = static_cast<std::int32_t>(lv.orbit.size());
        for (std::size_t j = 0; j < lv.gens.size(); ++j) lv.pending.push_back({lv.orbit.size(), j});
        lv.orbit.push_back(pt);
        lv.trans.push_back(u);
        lv.trans_inv.push_back(fp_inverse(u));
    }

    void close_orbit(Level& lv) {
        for (std::size_t i = 0; i < lv.orbit.size(); ++i)
            for (const FpMat& s : lv.gens) {
                std::uint32_t q = act(s, lv.orbit[i]);
                if (lv.pos[q] < 0) add_orbit_point(lv, q, fp_mul(s, lv.trans[i]));
            }
    }

    void add_generator(const FpMat& g, std::size_t level) {
        if (level == levels.size()) {
            std::uint32_t base = 0;
            for (std::uint32_t v = 1; v < space; ++v)
                if (act(g, v) != v) {
                    base = v;
                    break;
                }
            if (base == 0) return;  // identity in disguise
            levels.emplace_back();
            Level& lv = levels.back();
            lv.base = base;
            lv.pos.assign(space, -1);
            add_orbit_point(lv, base, fp_identity(p));
        }
        // The new element fixes every base above `level`, so it is a strong
        // generator for this level and all earlier ones.
        for (std::size_t k = 0; k <= level; ++k) {
            Level& lv = levels[k];
            for (std::size_t i = 0; i < lv.orbit.size(); ++i)
                lv.pending.push_back({i, lv.gens.size()});
            lv.gens.push_back(g);
            close_orbit(lv);
        }
    }

    // Reduces g through the chain starting at `from`; returns the residue and
    // the first level whose transversal cannot absorb it.
    std::pair<FpMat, std::size_t> sift(FpMat g, std::size_t from) const {
        for (std::size_t k = from; k < levels.size(); ++k) {
            const Level& lv = levels[k];
            std::int32_t i = lv.pos[act(g, lv.base)];
            if (i < 0) return {g, k};
            g = fp_mul(lv.trans_inv[i], g);
        }
        return {g, levels.size()};
    }

    void process() {
        for (;;) {
            Level* deepest = nullptr;
            std::size_t at = 0;
            for (std::size_t k = levels.size(); k-- > 0;)
                if (!levels[k].pending.empty()) {
                    deepest = &levels[k];
                    at = k;
                    break;
                }
            if (!deepest) return;
            auto [i, j] = deepest->pending.front();
            deepest->pending.pop_front();
            std::uint32_t pt = deepest->orbit[i];
            const FpMat& s = deepest->gens[j];
            std::int32_t q = deepest->pos[act(s, pt)];
            FpMat schreier = fp_mul(deepest->trans_inv[q], fp_mul(s, deepest->trans[i]));
            if (schreier.is_identity()) continue;
            auto [residue, level] = sift(schreier, at + 1);
            if (!residue.is_identity()) add_generator(residue, level);
        }
    }
};

}  // namespace

Integer subgroup_order_mod_p(const std::vector<FpMat>& gens) {
    if (gens.empty()) return 1;
    std::uint32_t p = gens.front().p;
    if (p < 2 || p > 31)
        throw std::invalid_argument("stabilizer chain supports primes p with 2 <= p <= 31");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    Chain chain;
    chain.p = p;
    chain.space = p * p * p * p;
    for (const FpMat& g : gens) {
        if (g.p != p) throw std::invalid_argument("generators live over different primes");
        fp_inverse(g);  // rejects singular input early
        if (g.is_identity()) continue;
        auto [residue, level] = chain.sift(g, 0);
        if (!residue.is_identity()) {
            chain.add_generator(residue, level);
            chain.process();
        }
    }
    Integer order = 1;
    for (const Level& lv : chain.levels) order *= static_cast<unsigned long>(lv.orbit.size());
    return order;
}

}  // namespace fuchsmon
