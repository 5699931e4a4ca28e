// Structural analysis of the rational monodromy groups: quasi-unipotency
// profiles, maximally unipotent elements and the seeded random search for
// them, exact witness checks, common fixed spaces, unipotently generated
// subgroups, rank-1 pairing constants, and Zariski-density certification by
// reduction mod p.

#ifndef FUCHSMON_GROUPS_HPP
#define FUCHSMON_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuchsmon/fp4.hpp"
#include "fuchsmon/qmat.hpp"
#include "fuchsmon/symplectic.hpp"

namespace fuchsmon {

// Quasi-unipotency profile: k is the least positive integer with
// (M^k - Id)^4 = 0, and nilpotency_index the least n with (M^k - Id)^n = 0.
struct UnipotencyData {
    long k = 1;
    int nilpotency_index = 1;
};

// Computes the profile by factoring the characteristic polynomial into
// cyclotomics (degree 4 admits only indices 1,2,3,4,5,6,8,10,12); k is the
// lcm of the indices present.  Throws std::domain_error when some eigenvalue
// is not a root of unity.
UnipotencyData unipotency(const QMat4& m);

// Maximal unipotency: (M - Id)^4 = 0 and (M - Id)^3 != 0, so the minimal
// polynomial is exactly (X - 1)^4.
bool is_mum(const QMat4& m);

// The k-th power of the standard 4x4 unipotent Jordan block: upper
// triangular with binomial superdiagonals k, k(k-1)/2, k(k-1)(k-2)/6.
QMat4 mum_power_formula(long k);

struct MumSearchResult {
    Word word;      // normal form: nonzero exponents, adjacent labels distinct
    QMat4 matrix;   // exact product of the word
    long trials = 0;  // candidates sampled up to and including the hit
};

// Seeded random search for a maximally unipotent word over the generators.
// Each trial samples at most max_len letters (a generator or its inverse),
// reduces them to normal form, skips words already seen, screens the product
// with a single-prime modular unipotency filter and confirms survivors in
// exact arithmetic.  Deterministic for a fixed seed; returns the first
// confirmed word or nothing once budget trials are spent.  Absence of a hit
// is evidence, never proof.
std::optional<MumSearchResult> random_mum_search(const GeneratorMap& gens, int max_len,
                                                 long budget, std::uint64_t seed);

// Exact certificate check: the word's product raised to outer_power equals
// the expected matrix, and that matrix is maximally unipotent.
bool verify_witness(const GeneratorMap& gens, const Word& word, long outer_power,
                    const QMat4& expected);

struct FixedSpace {
    int dimension = 0;
    std::vector<std::vector<Rational>> basis;  // vectors fixed by every generator
};

// Exact intersection of the kernels of (M - Id) over all generators.
FixedSpace common_fixed_space(const std::vector<QMat4>& gens);

struct UnipotentGenerator {
    std::string label;
    long k = 1;       // unipotency order of the local generator
    QMat4 power;      // M^k, always unipotent
    bool trivial = false;  // M^k = Id contributes nothing to the subgroup
};

// Each labeled generator raised to its unipotency order: the generating set
// of the unipotently generated subgroup of the monodromy group.
std::vector<UnipotentGenerator> unipotent_subgroup(
    const std::vector<std::pair<std::string, QMat4>>& local_gens);

// Pairing constants of two rank-1 unipotent matrices: with f_i the primitive
// integral generator of im(M_i - Id), the raw constants satisfy
// M_1 f_2 = f_2 + raw_a f_1 and M_2 f_1 = f_1 + raw_b f_2.  Their product is
// invariant under rescaling f_1, f_2; the normalized pair rescales f_2 so
// that a = 1 and b = raw_a * raw_b, which must be a nonzero integer.
struct PairingConstants {
    Rational raw_a, raw_b;
    Integer a, b;
    std::vector<Integer> f1, f2;  // primitive images, pre-normalization
};

// Throws std::domain_error when a matrix is not rank-1 unipotent, the images
// are dependent, a cross action leaves the image line, the pair commutes
// trivially (a zero constant), or the invariant product is not an integer.
PairingConstants rank1_pairing(const QMat4& m1, const QMat4& m2);

enum class DensityVerdict { Dense, Inconclusive };

// Zariski-density certificate by reduction mod p (p >= 5 prime): dense when
// the reductions generate the full symplectic group over F_p, inconclusive
// otherwise.  Inconclusive is never a proof of thinness.  Generators must be
// integral and preserve the standard symplectic form exactly.
DensityVerdict density_verdict(const std::vector<QMat4>& gens, std::uint32_t p);

// The three-generator family <A, B, C_n> of integral symplectic matrices
// whose index in the full integral symplectic group grows with n.
std::vector<QMat4> gn_generators(long n);

}  // namespace fuchsmon

#endif
