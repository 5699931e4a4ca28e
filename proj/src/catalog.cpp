#include "fuchsmon/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catalog_data/catalog_texts.hpp"

namespace fuchsmon {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Lines of the text with comments stripped; blank lines are dropped.
std::vector<std::vector<std::string>> content_lines(std::string_view text) {
    std::vector<std::vector<std::string>> out;
    std::string cur;
    std::istringstream in{std::string(text)};
    while (std::getline(in, cur)) {
        auto hash = cur.find('#');
        if (hash != std::string::npos) cur.erase(hash);
        auto toks = tokenize(cur);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

QMat4 read_matrix_rows(const std::vector<std::vector<std::string>>& lines, std::size_t& i,
                       const std::string& what) {
    QMat4 m;
    for (int r = 0; r < 4; ++r) {
        if (i >= lines.size() || lines[i].size() != 4)
            throw std::invalid_argument("catalog: " + what + " needs 4 rows of 4 entries");
        for (int c = 0; c < 4; ++c) m(r, c) = parse_rational(lines[i][c]);
        ++i;
    }
    return m;
}

std::string join(const std::vector<std::string>& toks, std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < toks.size(); ++i) {
        if (!s.empty()) s += ' ';
        s += toks[i];
    }
    return s;
}

Word parse_word_tokens(const std::vector<std::string>& toks, std::size_t from) {
    Word w;
    for (std::size_t i = from; i < toks.size(); ++i) w.push_back(parse_word_factor(toks[i]));
    return w;
}

std::string render_row(const QMat4& m, int row) {
    std::string s;
    for (int c = 0; c < 4; ++c) {
        if (c) s += ' ';
        s += to_string(m(row, c));
    }
    return s;
}

// The eigenvalue of the local monodromy attached to one exponent is
// e^{2 pi i e}; all catalog exponents are half-integers, so the expected
// characteristic polynomial is a product of (X -+ 1) factors.
Poly charpoly_from_exponents(const ExponentList& exps) {
    Poly p(Rational(1));
    for (const auto& e : exps) {
        Rational f = frac_part(e);
        if (f == 0)
            p = p * Poly({Rational(-1), Rational(1)});
        else if (f == Rational(1, 2))
            p = p * Poly({Rational(1), Rational(1)});
        else
            throw std::domain_error("exponent " + to_string(e) +
                                    " has no rational eigenvalue target");
    }
    return p;
}

struct PendingSuspect {
    enum class Kind { Matrix, TransitionRow, WitnessWord } kind;
    std::string matrix_label;
    int row = 0, col = 0;
    std::string printed, stored;
};

}  // namespace

SingularPoint CatalogEntry::point(const std::string& label) const {
    for (std::size_t i = 0; i < point_labels_.size(); ++i)
        if (point_labels_[i] == label) return riemann_.entries[i].point;
    throw std::invalid_argument("operator " + std::to_string(id_) + " has no point labeled " +
                                label);
}

bool CatalogEntry::has_matrix(const std::string& label) const {
    for (const auto& [l, m] : matrices_)
        if (l == label) return true;
    return false;
}

const QMat4& CatalogEntry::matrix(const std::string& label) const {
    for (const auto& [l, m] : matrices_)
        if (l == label) return m;
    throw std::invalid_argument("operator " + std::to_string(id_) +
                                " has no published matrix at " + label);
}

GeneratorMap CatalogEntry::generator_map() const {
    GeneratorMap g;
    for (const auto& [l, m] : matrices_) g[l] = m;
    return g;
}

CatalogEntry parse_catalog_entry(std::string_view text) {
    CatalogEntry e;
    auto lines = content_lines(text);

    std::string theta_src;
    std::vector<std::pair<std::string, ExponentList>> symbol_rows;
    std::vector<PendingSuspect> suspects;
    bool have_transition = false, have_witness = false;
    Word witness_word;
    long witness_outer = 1;
    QMat4 witness_matrix;

    std::size_t i = 0;
    while (i < lines.size()) {
        const auto& toks = lines[i];
        const std::string& key = toks[0];
        ++i;
        if (key == "id") {
            if (toks.size() != 2) throw std::invalid_argument("catalog: bad id line");
            e.id_ = std::stoi(toks[1]);
        } else if (key == "class") {
            for (std::size_t k = 1; k < toks.size(); ++k)
                e.equivalence_class_.push_back(std::stoi(toks[k]));
        } else if (key == "theta") {
            theta_src = join(toks, 1);
        } else if (key == "point") {
            if (toks.size() != 7 || toks[2] != "exponents")
                throw std::invalid_argument("catalog: bad point line");
            ExponentList ex;
            for (int k = 0; k < 4; ++k) ex[k] = parse_rational(toks[3 + k]);
            symbol_rows.emplace_back(toks[1], ex);
        } else if (key == "recipe") {
            if (toks.size() != 6) throw std::invalid_argument("catalog: bad recipe line");
            e.recipe_.conifold_label = toks[1];
            if (toks[2] == "nested")
                e.recipe_.mode = RecipeMode::Nested;
            else if (toks[2] == "direct")
                e.recipe_.mode = RecipeMode::Direct;
            else
                throw std::invalid_argument("catalog: unknown recipe mode " + toks[2]);
            for (int k = 0; k < 3; ++k)
                e.recipe_.steps[k] = Word{parse_word_factor(toks[3 + k])};
        } else if (key == "matrix") {
            if (toks.size() != 2) throw std::invalid_argument("catalog: bad matrix line");
            e.matrices_.emplace_back(toks[1], read_matrix_rows(lines, i, "matrix " + toks[1]));
        } else if (key == "unpublished") {
            for (std::size_t k = 1; k < toks.size(); ++k) e.unpublished_.push_back(toks[k]);
        } else if (key == "h") {
            for (std::size_t k = 1; k < toks.size(); ++k)
                e.h_spec_.generators.push_back(Word{parse_word_factor(toks[k])});
        } else if (key == "transition") {
            e.transition_ = read_matrix_rows(lines, i, "transition");
            have_transition = true;
        } else if (key == "witness_word") {
            witness_word = parse_word_tokens(toks, 1);
        } else if (key == "witness_outer") {
            if (toks.size() != 2) throw std::invalid_argument("catalog: bad witness_outer line");
            witness_outer = std::stol(toks[1]);
        } else if (key == "witness") {
            witness_matrix = read_matrix_rows(lines, i, "witness");
            have_witness = true;
        } else if (key == "product_order") {
            for (std::size_t k = 1; k < toks.size(); ++k) e.product_order_.push_back(toks[k]);
        } else if (key == "suspect") {
            if (toks.size() < 2) throw std::invalid_argument("catalog: bad suspect line");
            PendingSuspect s;
            if (toks[1] == "matrix") {
                if (toks.size() != 9 || toks[5] != "printed" || toks[7] != "stored")
                    throw std::invalid_argument("catalog: bad suspect matrix line");
                s.kind = PendingSuspect::Kind::Matrix;
                s.matrix_label = toks[2];
                s.row = std::stoi(toks[3]);
                s.col = std::stoi(toks[4]);
                s.printed = toks[6];
                s.stored = toks[8];
            } else if (toks[1] == "transition_row") {
                if (toks.size() != 8 || toks[3] != "printed")
                    throw std::invalid_argument("catalog: bad suspect transition_row line");
                s.kind = PendingSuspect::Kind::TransitionRow;
                s.row = std::stoi(toks[2]);
                s.printed = join(toks, 4);
            } else if (toks[1] == "witness_word") {
                if (toks.size() < 4 || toks[2] != "printed")
                    throw std::invalid_argument("catalog: bad suspect witness_word line");
                s.kind = PendingSuspect::Kind::WitnessWord;
                s.printed = join(toks, 3);
            } else {
                throw std::invalid_argument("catalog: unknown suspect target " + toks[1]);
            }
            suspects.push_back(std::move(s));
        } else if (key == "note") {
            e.notes_.push_back(join(toks, 1));
        } else {
            throw std::invalid_argument("catalog: unknown directive " + key);
        }
    }

    if (e.id_ == 0) throw std::invalid_argument("catalog: entry without id");
    if (theta_src.empty()) throw std::invalid_argument("catalog: entry without operator");
    if (!have_transition) throw std::invalid_argument("catalog: entry without transition");

    e.op_ = parse_operator(theta_src);
    e.op_.set_label(std::to_string(e.id_));

    if (have_witness) {
        if (witness_word.empty())
            throw std::invalid_argument("catalog: witness matrix without witness word");
        e.witness_ = MumWitness{std::move(witness_word), witness_outer, witness_matrix};
    }

    // Resolve point labels. The complex-conjugate pair labels pick the two
    // quadratic points of the computed singular locus by the sign of the
    // radical part; everything else is literal.
    std::vector<SingularPoint> quadratics;
    for (const auto& [lbl, ex] : symbol_rows) {
        if (lbl == "cplus" || lbl == "cminus") {
            if (quadratics.empty())
                for (const auto& p : singular_locus(e.op_))
                    if (p.is_quadratic()) quadratics.push_back(p);
            auto it = std::find_if(quadratics.begin(), quadratics.end(), [&](const auto& p) {
                return (lbl == "cplus") ? p.q.b() > 0 : p.q.b() < 0;
            });
            if (it == quadratics.end())
                throw std::invalid_argument("catalog: no quadratic singular point for " + lbl);
            e.riemann_.entries.push_back({*it, ex, classify(ex)});
        } else if (lbl == "oo") {
            e.riemann_.entries.push_back({SingularPoint::infinity(), ex, classify(ex)});
        } else {
            e.riemann_.entries.push_back({SingularPoint::rational(parse_rational(lbl)), ex,
                                          classify(ex)});
        }
        e.point_labels_.push_back(lbl);
    }

    for (const auto& s : suspects) {
        SuspectedTypo t;
        t.printed = s.printed;
        switch (s.kind) {
            case PendingSuspect::Kind::Matrix:
                t.location = "matrix M_" + s.matrix_label + " entry (" + std::to_string(s.row) +
                             "," + std::to_string(s.col) + ")";
                t.stored = s.stored;
                break;
            case PendingSuspect::Kind::TransitionRow:
                t.location = "transition row " + std::to_string(s.row);
                t.stored = render_row(e.transition_, s.row - 1);
                break;
            case PendingSuspect::Kind::WitnessWord:
                t.location = "witness word";
                t.stored = e.witness_ ? word_str(e.witness_->word) : "";
                break;
        }
        e.typos_.push_back(std::move(t));
    }
    return e;
}

std::vector<std::string> verify_catalog_entry(const CatalogEntry& e) {
    std::vector<std::string> fails;
    const std::string tag = "operator " + std::to_string(e.id()) + ": ";
    auto fail = [&](const std::string& msg) { fails.push_back(tag + msg); };

    if (e.equivalence_class().empty() || e.equivalence_class().front() != e.id())
        fail("equivalence class must start with the representative");

    // The stored Riemann data must agree exactly with what the operator
    // itself produces: same points, same exponents.
    try {
        RiemannSymbol computed = riemann_symbol(e.op());
        if (computed.entries.size() != e.riemann().entries.size())
            fail("computed singular locus has " + std::to_string(computed.entries.size()) +
                 " points, catalog lists " + std::to_string(e.riemann().entries.size()));
        for (const auto& re : e.riemann().entries) {
            const RiemannEntry* c = computed.find(re.point);
            if (!c) {
                fail("catalog point " + re.point.str() + " is not in the computed locus");
                continue;
            }
            if (c->exponents != re.exponents)
                fail("exponents at " + re.point.str() + " disagree with the operator");
            if (c->kind != re.kind) fail("kind at " + re.point.str() + " disagrees");
        }
    } catch (const std::exception& ex) {
        fail(std::string("local analysis failed: ") + ex.what());
    }

    // Label bookkeeping: published and unpublished labels partition the
    // declared points.
    {
        std::set<std::string> declared(e.point_labels().begin(), e.point_labels().end());
        std::set<std::string> covered;
        for (const auto& [l, m] : e.published_matrices()) {
            if (!declared.count(l)) fail("matrix at undeclared point " + l);
            if (!covered.insert(l).second) fail("duplicate matrix at " + l);
        }
        for (const auto& l : e.unpublished_points()) {
            if (!declared.count(l)) fail("unpublished mark on undeclared point " + l);
            if (!covered.insert(l).second) fail("point " + l + " both published and unpublished");
        }
        if (covered != declared) fail("some points are neither published nor marked unpublished");
    }

    // Published matrices: determinant one, characteristic polynomial as the
    // local exponents predict.
    auto entry_of = [&](const std::string& lbl) -> const RiemannEntry* {
        for (std::size_t i = 0; i < e.point_labels().size(); ++i)
            if (e.point_labels()[i] == lbl) return &e.riemann().entries[i];
        return nullptr;
    };
    for (const auto& [lbl, m] : e.published_matrices()) {
        if (m.det() != 1) fail("matrix M_" + lbl + " has determinant " + to_string(m.det()));
        const RiemannEntry* re = entry_of(lbl);
        if (!re) continue;
        try {
            if (m.charpoly() != charpoly_from_exponents(re->exponents))
                fail("matrix M_" + lbl + " has the wrong characteristic polynomial");
        } catch (const std::exception& ex) {
            fail(std::string("charpoly target at ") + lbl + ": " + ex.what());
        }
    }

    // Recipe point: kind C(n), published, and rank(M^n - Id) = 1.
    {
        const RiemannEntry* re = entry_of(e.recipe().conifold_label);
        if (!re) {
            fail("recipe point " + e.recipe().conifold_label + " is not declared");
        } else if (re->kind.type != SingularityKind::Type::C) {
            fail("recipe point " + e.recipe().conifold_label + " has kind " + re->kind.str() +
                 ", not C");
        } else if (!e.has_matrix(e.recipe().conifold_label)) {
            fail("recipe point has no published matrix");
        } else {
            QMat4 n = e.matrix(e.recipe().conifold_label).pow(re->kind.n) - QMat4::identity();
            if (n.rank() != 1)
                fail("rank(M^" + std::to_string(re->kind.n) + " - Id) at the recipe point is " +
                     std::to_string(n.rank()) + ", expected 1");
        }
    }

    // Witness: the corrected word reproduces the published matrix exactly,
    // and that matrix is maximally unipotent.
    if (e.mum_witness()) {
        const auto& w = *e.mum_witness();
        try {
            QMat4 prod = evaluate_word(e.generator_map(), w.word).pow(w.outer_power);
            if (prod != w.matrix) fail("witness word does not reproduce the published matrix");
        } catch (const std::exception& ex) {
            fail(std::string("witness evaluation failed: ") + ex.what());
        }
        QMat4 n = w.matrix - QMat4::identity();
        QMat4 n2 = n * n;
        if (!(n2 * n2).is_zero() || (n2 * n).is_zero())
            fail("witness matrix is not maximally unipotent");
    }

    // Product relation at characteristic-polynomial level, in the recorded
    // ordering.  Apparent points carry trivial monodromy and stay out.
    {
        std::set<std::string> expected_order;
        for (const auto& [lbl, m] : e.published_matrices())
            if (lbl != "oo") expected_order.insert(lbl);
        std::set<std::string> given(e.product_order().begin(), e.product_order().end());
        if (given != expected_order ||
            e.product_order().size() != expected_order.size()) {
            fail("product_order must list each published finite point exactly once");
        } else {
            std::vector<std::string> missing;
            for (std::size_t i = 0; i < e.point_labels().size(); ++i) {
                const auto& lbl = e.point_labels()[i];
                if (lbl == "oo" || e.has_matrix(lbl)) continue;
                if (e.riemann().entries[i].kind.type != SingularityKind::Type::Apparent)
                    missing.push_back(lbl);
            }
            QMat4 p = QMat4::identity();
            for (const auto& lbl : e.product_order()) p = p * e.matrix(lbl);
            if (e.has_matrix("oo")) {
                if (missing.size() != 1) {
                    fail("product relation with published infinity expects exactly one missing "
                         "finite matrix");
                } else {
                    QMat4 x = (p * e.matrix("oo")).inverse();
                    const RiemannEntry* re = entry_of(missing[0]);
                    if (re && x.charpoly() != charpoly_from_exponents(re->exponents))
                        fail("product relation does not predict the missing matrix at " +
                             missing[0]);
                }
            } else {
                if (!missing.empty()) {
                    fail("unpublished non-apparent finite point " + missing[0] +
                         " blocks the product relation");
                } else {
                    const RiemannEntry* re = entry_of("oo");
                    if (re && p.inverse().charpoly() != charpoly_from_exponents(re->exponents))
                        fail("product relation does not predict the monodromy at infinity");
                }
            }
        }
    }

    // Annotation coherence: every suspected typo names a live slot whose
    // stored value matches the annotation.
    for (const auto& t : e.suspected_typos()) {
        if (t.location.rfind("matrix M_", 0) == 0) {
            auto open = t.location.find('('), comma = t.location.find(','),
                 close = t.location.find(')');
            std::string lbl = t.location.substr(9, t.location.find(' ', 9) - 9);
            int r = std::stoi(t.location.substr(open + 1, comma - open - 1));
            int c = std::stoi(t.location.substr(comma + 1, close - comma - 1));
            if (!e.has_matrix(lbl)) {
                fail("typo annotation on unknown matrix M_" + lbl);
            } else {
                if (e.matrix(lbl)(r - 1, c - 1) != parse_rational(t.stored))
                    fail("typo annotation at " + t.location + " disagrees with the stored value");
                if (parse_rational(t.printed) == parse_rational(t.stored))
                    fail("typo annotation at " + t.location + " marks an unchanged value");
            }
        } else if (t.location.rfind("transition row", 0) == 0) {
            int r = std::stoi(t.location.substr(15));
            if (t.stored != render_row(e.transition(), r - 1))
                fail("transition typo annotation disagrees with the stored row");
        } else if (t.location == "witness word") {
            if (!e.mum_witness() || t.stored != word_str(e.mum_witness()->word))
                fail("witness word annotation disagrees with the stored word");
        } else {
            fail("unrecognized typo annotation location: " + t.location);
        }
    }

    // Invariant skew form: unique up to scale, preserved by every published
    // generator, and normalized by both the derived and the stored transition.
    {
        std::vector<QMat4> gens;
        for (const auto& [lbl, m] : e.published_matrices()) gens.push_back(m);
        auto inv = invariant_form(gens);
        if (inv.nullity != 1) {
            fail("invariant form nullity is " + std::to_string(inv.nullity) + ", expected 1");
        } else {
            for (const auto& [lbl, m] : e.published_matrices())
                if (!(m.transpose() * inv.form * m == inv.form))
                    fail("generator M_" + lbl + " does not preserve the invariant form");
            try {
                QMat4 t = symplectic_transition(inv.form);
                if (!(t.transpose() * inv.form * t == standard_omega()))
                    fail("derived transition does not normalize the invariant form");
            } catch (const std::exception& ex) {
                fail(std::string("symplectic transition failed: ") + ex.what());
            }
            const QMat4& tc = e.transition();
            if (tc.det() == 0) {
                fail("stored transition matrix is singular");
            } else {
                QMat4 r = tc.transpose() * inv.form * tc;
                Rational c = r(0, 2);
                if (c == 0 || !(r == c * standard_omega()))
                    fail("stored transition does not normalize the invariant form up to scale");
            }
        }
    }

    // The distinguished subgroup realizes integrally and symplectically
    // through the stored transition.
    try {
        realize_subgroup(e.generator_map(), e.h_spec(), e.transition());
    } catch (const std::exception& ex) {
        fail(std::string("subgroup realization failed: ") + ex.what());
    }

    return fails;
}

const std::vector<int>& all_ids() {
    static const std::vector<int> ids = {33, 35, 97, 152, 153, 243, 248, 250, 266};
    return ids;
}

namespace {

const std::map<int, CatalogEntry>& all_entries() {
    static const std::map<int, CatalogEntry> cache = [] {
        std::map<int, CatalogEntry> m;
        for (const auto* t : catalog_data::operator_texts()) {
            if (fnv1a64(t->text) != t->fnv)
                throw std::runtime_error("catalog text for operator " + std::to_string(t->id) +
                                         " failed its checksum");
            CatalogEntry e = parse_catalog_entry(t->text);
            if (e.id() != t->id)
                throw std::runtime_error("catalog text for operator " + std::to_string(t->id) +
                                         " declares id " + std::to_string(e.id()));
            auto fails = verify_catalog_entry(e);
            if (!fails.empty()) {
                std::string msg = "catalog entry failed verification: " + fails.front();
                if (fails.size() > 1)
                    msg += " (+" + std::to_string(fails.size() - 1) + " more)";
                throw std::runtime_error(msg);
            }
            m.emplace(e.id(), std::move(e));
        }
        return m;
    }();
    return cache;
}

}  // namespace

const CatalogEntry& load(int id) {
    const auto& entries = all_entries();
    auto it = entries.find(id);
    if (it != entries.end()) return it->second;
    for (const auto& [rep, entry] : entries) {
        const auto& cls = entry.equivalence_class();
        if (std::find(cls.begin(), cls.end(), id) != cls.end())
            throw std::invalid_argument("operator " + std::to_string(id) +
                                        " is an equivalence-class member; its representative is " +
                                        std::to_string(rep));
    }
    throw std::invalid_argument("unknown operator id " + std::to_string(id));
}

const AuxiliaryData& auxiliary() {
    static const AuxiliaryData data = [] {
        const auto& t = catalog_data::kAux;
        if (fnv1a64(t.text) != t.fnv)
            throw std::runtime_error("auxiliary catalog text failed its checksum");
        AuxiliaryData a;
        auto lines = content_lines(t.text);
        std::size_t i = 0;
        while (i < lines.size()) {
            const auto toks = lines[i];
            const std::string& key = toks[0];
            ++i;
            if (key == "gn_a") {
                a.gn_a = read_matrix_rows(lines, i, "gn_a");
            } else if (key == "gn_b") {
                a.gn_b = read_matrix_rows(lines, i, "gn_b");
            } else if (key == "gn_c_slot") {
                a.gn_c_row = std::stoi(toks.at(1)) - 1;
                a.gn_c_col = std::stoi(toks.at(2)) - 1;
            } else if (key == "op35_conjugator") {
                a.op35_conjugator = read_matrix_rows(lines, i, "op35_conjugator");
            } else if (key == "op35_new_gen") {
                a.op35_new_generators.emplace_back(
                    toks.at(1), read_matrix_rows(lines, i, "op35_new_gen"));
            } else if (key == "op250_symplectic_gen") {
                a.op250_symplectic_generators.emplace_back(
                    toks.at(1), read_matrix_rows(lines, i, "op250_symplectic_gen"));
            } else if (key == "known_index") {
                a.known_indices[toks.at(1)] = std::stol(toks.at(2));
            } else if (key == "op153_pairing") {
                a.op153_pairing = {std::stol(toks.at(1)), std::stol(toks.at(2))};
            } else if (key == "note") {
                a.notes.push_back(join(toks, 1));
            } else {
                throw std::runtime_error("auxiliary catalog: unknown directive " + key);
            }
        }
        return a;
    }();
    return data;
}

CheckReport self_check() {
    CheckReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    std::map<int, CatalogEntry> entries;
    for (const auto* t : catalog_data::operator_texts()) {
        if (fnv1a64(t->text) != t->fnv) {
            fail("operator " + std::to_string(t->id) + ": embedded text checksum mismatch");
            continue;
        }
        try {
            CatalogEntry e = parse_catalog_entry(t->text);
            auto fails = verify_catalog_entry(e);
            for (auto& f : fails) fail(f);
            if (fails.empty()) {
                std::string order;
                for (const auto& lbl : e.product_order()) order += " " + lbl;
                report.notes.push_back("operator " + std::to_string(e.id()) +
                                       ": product relation holds in the order" + order);
                for (const auto& ty : e.suspected_typos())
                    report.notes.push_back("operator " + std::to_string(e.id()) +
                                           ": suspected typo at " + ty.location + ": printed " +
                                           ty.printed + ", stored " + ty.stored);
                entries.emplace(e.id(), std::move(e));
            }
        } catch (const std::exception& ex) {
            fail("operator " + std::to_string(t->id) + ": " + ex.what());
        }
    }

    try {
        const AuxiliaryData& aux = auxiliary();
        const std::vector<std::pair<std::string, QMat4>> gn = {
            {"A", aux.gn_a}, {"B", aux.gn_b}, {"C_5", aux.gn_c(5)}};
        for (const auto& [name, m] : gn)
            if (!m.is_integral() || !is_symplectic(m))
                fail("auxiliary generator " + name + " is not integral symplectic");
        for (const auto& [lbl, m] : aux.op250_symplectic_generators)
            if (!m.is_integral() || !is_symplectic(m))
                fail("auxiliary op250 generator at " + lbl + " is not integral symplectic");

        auto it35 = entries.find(35);
        if (it35 != entries.end()) {
            const CatalogEntry& e35 = it35->second;
            if (aux.op35_conjugator != e35.transition())
                fail("op35 conjugator differs from the stored transition");
            QMat4 w = aux.op35_conjugator;
            QMat4 wi = w.inverse();
            GeneratorMap g = e35.generator_map();
            for (const auto& [lbl, target] : aux.op35_new_generators)
                if (wi * g.at(lbl) * w != target)
                    fail("op35 conjugation of M_" + lbl + " misses the published generator");
            if (wi * g.at("0").pow(-2) * w != aux.gn_c(32))
                fail("op35 conjugated M_0^-2 is not C_32");
            report.notes.push_back(
                "operator 35: conjugation carries the generators onto A, B and C_32");
        }

        auto it250 = entries.find(250);
        if (it250 != entries.end()) {
            const CatalogEntry& e250 = it250->second;
            try {
                auto realized =
                    realize_subgroup(e250.generator_map(), e250.h_spec(), e250.transition());
                const auto& expected = aux.op250_symplectic_generators;
                bool match = realized.size() == expected.size();
                for (std::size_t k = 0; match && k < realized.size(); ++k)
                    match = realized[k] == expected[k].second;
                if (!match)
                    fail("op250 realization differs from the published symplectic generators");
                else
                    report.notes.push_back(
                        "operator 250: realization reproduces the published symplectic "
                        "generators");
            } catch (const std::exception& ex) {
                fail(std::string("op250 realization: ") + ex.what());
            }
        }
        report.notes.push_back("known indices on record: " +
                               std::to_string(aux.known_indices.size()));
    } catch (const std::exception& ex) {
        fail(std::string("auxiliary data: ") + ex.what());
    }

    return report;
}

}  // namespace fuchsmon
