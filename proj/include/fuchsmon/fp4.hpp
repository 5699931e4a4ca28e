// Exact computation in GL(4) over a small prime field: reduction of rational
// matrices, arithmetic, and the order of a finitely generated matrix group
// via a deterministic stabilizer chain on the vectors of F_p^4.

#ifndef FUCHSMON_FP4_HPP
#define FUCHSMON_FP4_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fuchsmon/qmat.hpp"

namespace fuchsmon {

// 4x4 matrix over F_p, entries reduced, row-major.
struct FpMat {
    std::uint32_t p = 0;
    std::array<std::uint32_t, 16> e{};

    std::uint32_t& at(int i, int j) { return e[4 * i + j]; }
    std::uint32_t at(int i, int j) const { return e[4 * i + j]; }
    bool is_identity() const;

    friend bool operator==(const FpMat& a, const FpMat& b) { return a.p == b.p && a.e == b.e; }
    friend bool operator!=(const FpMat& a, const FpMat& b) { return !(a == b); }
};

FpMat fp_identity(std::uint32_t p);
FpMat fp_mul(const FpMat& a, const FpMat& b);

// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
FpMat fp_inverse(const FpMat& m);

// Power with a (possibly negative) integer exponent.
FpMat fp_pow(const FpMat& m, long k);

// Entrywise reduction of an exact rational matrix.  Throws std::domain_error
// when some denominator vanishes mod p.
FpMat reduce_mod_p(const QMat4& m, std::uint32_t p);

// |Sp(4, F_p)| = p^4 (p^2 - 1)(p^4 - 1).
Integer sp4_order(std::uint32_t p);

// Exact order of the subgroup of GL(4, F_p) generated by gens.  Deterministic
// stabilizer chain acting on the p^4 vectors of the column space: base points
// are the smallest moved vectors, orbits grow in BFS order, and every
// Schreier generator is sifted until the strong generating set closes.
// Throws std::invalid_argument on mixed primes or p > 31 (the chain stores
// flat p^4-sized tables), std::domain_error on singular generators.
Integer subgroup_order_mod_p(const std::vector<FpMat>& gens);

}  // namespace fuchsmon

#endif
