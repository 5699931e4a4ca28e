// Embedded ground-truth data for the nine order-4 orphan operators under
// study: the operators themselves, their singular point data, published
// monodromy matrices, basis recipes, distinguished subgroups with transition
// matrices, and maximally unipotent witnesses.
//
// Values are stored verbatim from the published tables except where a
// transcription slip is evident; such slots keep the corrected value on the
// computational path and carry a SuspectedTypo annotation with the printed
// one.  Every entry is re-verified against its own internal invariants at
// load time, so the data doubles as a test oracle.

#ifndef FUCHSMON_CATALOG_HPP
#define FUCHSMON_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuchsmon/local_analysis.hpp"
#include "fuchsmon/symplectic.hpp"
#include "fuchsmon/theta_op.hpp"

namespace fuchsmon {

// How the rational basis grows out of the conifold period f_c: Nested takes
// {f, N1 f, N2 N1 f, N3 N2 N1 f}, Direct takes {f, N1 f, N2 f, N3 f}, where
// N_i = (word_i evaluated) - Id.
enum class RecipeMode { Nested, Direct };

struct BasisRecipe {
    std::string conifold_label;  // label of the C-type point seeding the basis
    RecipeMode mode = RecipeMode::Nested;
    std::array<Word, 3> steps;
};

struct MumWitness {
    Word word;            // corrected word over the generator labels
    long outer_power = 1; // the listed product is raised to this power
    QMat4 matrix;         // the published target, reproduced exactly
};

struct SuspectedTypo {
    std::string location;  // e.g. "matrix M_2 entry (3,1)"
    std::string printed;   // verbatim published value
    std::string stored;    // corrected value used computationally
};

class CatalogEntry {
public:
    int id() const { return id_; }
    const std::vector<int>& equivalence_class() const { return equivalence_class_; }
    const ThetaOperator& op() const { return op_; }
    const RiemannSymbol& riemann() const { return riemann_; }
    const BasisRecipe& recipe() const { return recipe_; }

    // Singular point labels in published order ("0", "-1/2", "oo", "cplus", ...).
    const std::vector<std::string>& point_labels() const { return point_labels_; }
    SingularPoint point(const std::string& label) const;

    // Published local monodromy matrices (corrected values), published order.
    const std::vector<std::pair<std::string, QMat4>>& published_matrices() const {
        return matrices_;
    }
    bool has_matrix(const std::string& label) const;
    const QMat4& matrix(const std::string& label) const;
    GeneratorMap generator_map() const;

    // Points whose local monodromy has no published matrix: derivable
    // numerically, no published target.
    const std::vector<std::string>& unpublished_points() const { return unpublished_; }

    const SubgroupSpec& h_spec() const { return h_spec_; }
    const QMat4& transition() const { return transition_; }
    const std::optional<MumWitness>& mum_witness() const { return witness_; }

    // Ordering of the published finite labels for which the cyclic product
    // relation holds at characteristic-polynomial level (see verify).
    const std::vector<std::string>& product_order() const { return product_order_; }

    const std::vector<SuspectedTypo>& suspected_typos() const { return typos_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    friend CatalogEntry parse_catalog_entry(std::string_view text);

    int id_ = 0;
    std::vector<int> equivalence_class_;
    ThetaOperator op_;
    RiemannSymbol riemann_;
    BasisRecipe recipe_;
    std::vector<std::string> point_labels_;
    std::vector<std::pair<std::string, QMat4>> matrices_;
    std::vector<std::string> unpublished_;
    SubgroupSpec h_spec_;
    QMat4 transition_;
    std::optional<MumWitness> witness_;
    std::vector<std::string> product_order_;
    std::vector<SuspectedTypo> typos_;
    std::vector<std::string> notes_;
};

// Shared published data not tied to a single entry: the A/B/C_n generators of
// the nested test subgroups G_n, the operator-35 conjugation data, the four
// integral symplectic generators of the arithmetic entry, and known indices.
struct AuxiliaryData {
    QMat4 gn_a;
    QMat4 gn_b;
    int gn_c_row = 0, gn_c_col = 0;  // 0-indexed slot of the n entry in C_n
    QMat4 gn_c(long n) const {
        QMat4 m = QMat4::identity();
        m(gn_c_row, gn_c_col) = n;
        return m;
    }
    QMat4 op35_conjugator;
    std::vector<std::pair<std::string, QMat4>> op35_new_generators;
    std::vector<std::pair<std::string, QMat4>> op250_symplectic_generators;
    std::map<std::string, long> known_indices;
    std::pair<long, long> op153_pairing{0, 0};
    std::vector<std::string> notes;
};

// The nine representative ids in catalog order.
const std::vector<int>& all_ids();

// Loads (and caches) a fully verified entry.  Unknown ids throw; ids that are
// equivalence-class members name their representative in the error.
const CatalogEntry& load(int id);

const AuxiliaryData& auxiliary();

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

// Runs every static invariant over every entry: checksums, determinants,
// characteristic polynomials against the local exponents, recipe rank
// conditions, witness products, invariant-form uniqueness, transition
// normalization, subgroup realization integrality, product relations, and
// annotation coherence.  Purely exact arithmetic, no numerics.
CheckReport self_check();

// Building blocks, exposed for fixtures: parse one embedded text block
// (without checksum verification), and verify one parsed entry returning the
// list of failures (empty when sound).
CatalogEntry parse_catalog_entry(std::string_view text);
std::vector<std::string> verify_catalog_entry(const CatalogEntry& e);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace fuchsmon

#endif
