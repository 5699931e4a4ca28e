// Invariant skew forms, symplectic transitions and integral realizations.
//
// The monodromy matrices of an irreducible order-4 operator preserve a skew
// bilinear form omega(x, y) = x^T S y, unique up to scale.  invariant_form
// recovers S exactly from the generators, symplectic_transition normalizes S
// to the standard form by a rational change of basis, and realize_subgroup
// conjugates chosen generator powers into Sp(4,Z).

#ifndef FUCHSMON_SYMPLECTIC_HPP
#define FUCHSMON_SYMPLECTIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuchsmon/qmat.hpp"

namespace fuchsmon {

// One factor M_label^power of a formal word in the local monodromy
// generators.  Labels are singular point names such as "0", "-1/2" or "oo".
struct WordFactor {
    std::string label;
    long power = 1;

    friend bool operator==(const WordFactor& a, const WordFactor& b) {
        return a.label == b.label && a.power == b.power;
    }
};

using Word = std::vector<WordFactor>;

// "M_0^-1 M_2 M_oo^2" style rendering, factors separated by spaces.
std::string word_str(const Word& w);

// Parses a single factor token, e.g. "M_-1/2^-1" or "M_oo".
WordFactor parse_word_factor(const std::string& token);

using GeneratorMap = std::map<std::string, QMat4>;

// Left-to-right product of gens[label]^power.  Unknown labels throw.
QMat4 evaluate_word(const GeneratorMap& gens, const Word& w);

// A subgroup given by generator words over the local monodromy labels.
struct SubgroupSpec {
    std::vector<Word> generators;
};

struct InvariantFormResult {
    QMat4 form;   // primitive integer skew matrix, meaningful when nullity == 1
    int nullity = 0;
};

// Solves M^T S M = S over skew-symmetric S simultaneously for all
// generators.  The solution space is computed exactly; when it is a line the
// result carries its primitive integer representative (first nonzero entry
// positive).  Nullity 0 signals that the matrices preserve no skew form,
// nullity > 1 that they do not determine one.
InvariantFormResult invariant_form(const std::vector<QMat4>& gens);

// Rational T with T^T S T = Omega, built by symplectic Gram-Schmidt over the
// standard basis vectors in a fixed pivot order.  Throws invalid_argument if
// s is not skew or is degenerate.
QMat4 symplectic_transition(const QMat4& s);

// Conjugates each generator word w of the spec to T^-1 w T and verifies the
// results are integral and preserve Omega exactly.  Throws domain_error
// naming the offending word and entry otherwise.
std::vector<QMat4> realize_subgroup(const GeneratorMap& gens, const SubgroupSpec& spec,
                                    const QMat4& t);

// Best-effort search for a diagonal rescaling T' = T * diag(a, b, 1/a, 1/b)
// making every realized generator integral.  The diagonal factor is itself
// symplectic, so T'^T S T' = T^T S T.  a and b range over +-2^k with
// |k| <= max_power.
std::optional<QMat4> integral_rescale(const GeneratorMap& gens, const SubgroupSpec& spec,
                                      const QMat4& t, long max_power = 6);

// If m acts as the symplectic reflection v -> v + d * omega(f, v) * f with
// respect to the standard form and an integer d, returns d; otherwise
// nothing.  m == Id yields 0.
std::optional<Integer> conifold_reflection_form(const QMat4& m, const QVec4& f);

}  // namespace fuchsmon

#endif
