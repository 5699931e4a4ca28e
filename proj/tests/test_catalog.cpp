#include <doctest.h>

#include <algorithm>
#include <set>

#include "catalog_data/catalog_texts.hpp"
#include "fuchsmon/catalog.hpp"

using namespace fuchsmon;

TEST_CASE("fnv1a64 matches the reference constants") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("all nine representatives load") {
    CHECK(all_ids() == std::vector<int>{33, 35, 97, 152, 153, 243, 248, 250, 266});
    for (int id : all_ids()) {
        const CatalogEntry& e = load(id);
        CHECK(e.id() == id);
        CHECK(!e.point_labels().empty());
        CHECK(!e.published_matrices().empty());
        CHECK(!e.h_spec().generators.empty());
        CHECK(!e.product_order().empty());
    }
}

TEST_CASE("equivalence classes and member lookup") {
    CHECK(load(33).equivalence_class() == std::vector<int>{33, 70});
    CHECK(load(35).equivalence_class() == std::vector<int>{35, 71, 247, 252});
    CHECK(load(97).equivalence_class() == std::vector<int>{97, 98});
    CHECK(load(152).equivalence_class() == std::vector<int>{152, 198});
    CHECK(load(153).equivalence_class() == std::vector<int>{153, 197});
    CHECK(load(243).equivalence_class() == std::vector<int>{243});
    CHECK(load(248).equivalence_class() == std::vector<int>{248});
    CHECK(load(250).equivalence_class() == std::vector<int>{250, 258});
    CHECK(load(266).equivalence_class() == std::vector<int>{266, 273});

    CHECK_THROWS_WITH_AS(load(70), doctest::Contains("representative is 33"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(load(1), doctest::Contains("unknown operator id"),
                         std::invalid_argument);
}

TEST_CASE("entry 33 stores the expected pieces") {
    const CatalogEntry& e = load(33);
    CHECK(e.point_labels() == std::vector<std::string>{"0", "1", "2", "oo"});
    CHECK(e.unpublished_points() == std::vector<std::string>{"oo"});

    const QMat4& t = e.transition();
    CHECK(t(0, 0) == -4);
    CHECK(t(0, 1) == 0);
    CHECK(t(0, 2) == 192);
    CHECK(t(0, 3) == -16);

    CHECK(e.recipe().conifold_label == "1");
    CHECK(e.recipe().mode == RecipeMode::Nested);
    REQUIRE(e.mum_witness().has_value());
    CHECK(word_str(e.mum_witness()->word) == "M_2 M_0 M_1^-1");
    CHECK(e.mum_witness()->outer_power == -2);
    CHECK(e.suspected_typos().empty());

    CHECK(e.point("oo").is_infinity());
    CHECK(e.point("2") == SingularPoint::rational(Rational(2)));
    CHECK_THROWS_AS(e.point("5"), std::invalid_argument);
    CHECK_THROWS_AS(e.matrix("oo"), std::invalid_argument);
}

TEST_CASE("entry 35 has no unipotent witness and two flagged slots") {
    const CatalogEntry& e = load(35);
    CHECK(!e.mum_witness().has_value());
    REQUIRE(e.suspected_typos().size() == 2);
    CHECK(e.suspected_typos()[0].location == "matrix M_0 entry (1,3)");
    CHECK(e.suspected_typos()[0].printed == "-32");
    CHECK(e.suspected_typos()[0].stored == "32");
    CHECK(e.suspected_typos()[1].location == "transition row 1");
    CHECK(e.suspected_typos()[1].printed == "4 0 20 -4");
    CHECK(e.suspected_typos()[1].stored == "16 0 80 -16");
    CHECK(e.transition() == auxiliary().op35_conjugator);
}

TEST_CASE("entry 248 publishes all five finite matrices") {
    const CatalogEntry& e = load(248);
    std::set<std::string> labels;
    for (const auto& [l, m] : e.published_matrices()) labels.insert(l);
    CHECK(labels == std::set<std::string>{"0", "-1/2", "-1", "-3/2", "-2"});
    CHECK(e.unpublished_points() == std::vector<std::string>{"oo"});
    CHECK(e.suspected_typos().empty());
}

TEST_CASE("entry 266 resolves the conjugate quadratic pair") {
    const CatalogEntry& e = load(266);
    CHECK(e.recipe().mode == RecipeMode::Direct);
    SingularPoint cp = e.point("cplus");
    SingularPoint cm = e.point("cminus");
    REQUIRE(cp.is_quadratic());
    REQUIRE(cm.is_quadratic());
    CHECK(cp.q.b() > 0);
    CHECK(cm.q.b() < 0);
    CHECK(cp.q.a() == cm.q.a());
    CHECK(cp.q.d() == cm.q.d());
    CHECK(cp.q.d() < 0);

    REQUIRE(e.suspected_typos().size() == 2);
    CHECK(e.suspected_typos()[0].location == "matrix M_-1/2 entry (3,3)");
    CHECK(e.suspected_typos()[1].location == "witness word");
    CHECK(e.suspected_typos()[1].stored == "M_-1^-1 M_0 M_1/2^-1 M_-1 M_-1/2^-1");
}

TEST_CASE("flagged word slips on entries 97 and 152") {
    for (int id : {97, 152}) {
        const CatalogEntry& e = load(id);
        REQUIRE(e.suspected_typos().size() == 1);
        const auto& t = e.suspected_typos()[0];
        CHECK(t.location == "witness word");
        CHECK(t.stored == word_str(e.mum_witness()->word));
        CHECK(t.printed != t.stored);
    }
}

TEST_CASE("transition matrices rescale the invariant form by known constants") {
    const std::vector<std::pair<int, Rational>> expected = {
        {33, Rational(256)},    {35, Rational(256)},   {97, Rational(64)},
        {152, Rational(128)},   {153, Rational(2304)}, {243, Rational(614400)},
        {248, Rational(512)},   {250, Rational(-256)}, {266, Rational(900)},
    };
    for (const auto& [id, c] : expected) {
        CAPTURE(id);
        const CatalogEntry& e = load(id);
        std::vector<QMat4> gens;
        for (const auto& [l, m] : e.published_matrices()) gens.push_back(m);
        auto inv = invariant_form(gens);
        REQUIRE(inv.nullity == 1);
        QMat4 r = e.transition().transpose() * inv.form * e.transition();
        CHECK(r == c * standard_omega());
    }
}

TEST_CASE("arithmetic entry realizes the published symplectic generators") {
    const CatalogEntry& e = load(250);
    auto realized = realize_subgroup(e.generator_map(), e.h_spec(), e.transition());
    const auto& expected = auxiliary().op250_symplectic_generators;
    REQUIRE(realized.size() == expected.size());
    for (std::size_t i = 0; i < realized.size(); ++i) {
        CAPTURE(expected[i].first);
        CHECK(realized[i] == expected[i].second);
    }
}

TEST_CASE("auxiliary data parses and is coherent") {
    const AuxiliaryData& aux = auxiliary();
    QMat4 c32 = aux.gn_c(32);
    CHECK(c32(3, 1) == 32);
    c32(3, 1) = 0;
    CHECK(c32.is_identity());

    CHECK(aux.known_indices.at("G1") == 122880);
    CHECK(aux.known_indices.at("G2") == 11796480);
    CHECK(aux.known_indices.at("G4") == 1509949440);
    CHECK(aux.known_indices.at("op250") == 23592960);
    CHECK(aux.op153_pairing == std::pair<long, long>{1, 128});
    CHECK(aux.op35_new_generators.size() == 3);
    CHECK(aux.op250_symplectic_generators.size() == 4);
    CHECK(aux.notes.size() == 2);
}

TEST_CASE("self check passes and reports the flagged slots") {
    CheckReport r = self_check();
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok);
    CHECK(r.failures.empty());
    auto mentions = [&](const std::string& needle) {
        return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& n) {
            return n.find(needle) != std::string::npos;
        });
    };
    CHECK(mentions("operator 243: suspected typo"));
    CHECK(mentions("operator 35: conjugation carries the generators onto A, B and C_32"));
    CHECK(mentions("operator 250: realization reproduces the published symplectic generators"));
}

TEST_CASE("a corrupted matrix entry is caught by verification") {
    auto mentions = [](const std::vector<std::string>& fails, const std::string& a,
                       const std::string& b) {
        return std::any_of(fails.begin(), fails.end(), [&](const std::string& f) {
            return f.find(a) != std::string::npos && f.find(b) != std::string::npos;
        });
    };

    // A diagonal-block slot: the damage shows up in the characteristic
    // polynomial of the matrix itself.
    std::string text = catalog_data::kOp33.text;
    auto pos = text.find("\n0 2 2 4\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\n0 3 2 4\n");
    CHECK(fnv1a64(text) != catalog_data::kOp33.fnv);
    auto fails = verify_catalog_entry(parse_catalog_entry(text));
    REQUIRE(!fails.empty());
    CHECK(mentions(fails, "operator 33", "M_1"));

    // An off-diagonal slot of the same matrix that no single-matrix check
    // sees: the witness product, the cyclic relation and the invariant form
    // all break instead.
    text = catalog_data::kOp33.text;
    pos = text.find("-24 ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "-25");
    fails = verify_catalog_entry(parse_catalog_entry(text));
    CHECK(mentions(fails, "operator 33", "witness"));
    CHECK(mentions(fails, "operator 33", "invariant form"));
}

TEST_CASE("verification rejects a scrambled product order") {
    std::string text = catalog_data::kOp33.text;
    auto pos = text.find("product_order 2 1 0");
    REQUIRE(pos != std::string::npos);
    std::string scrambled = text;
    scrambled.replace(pos, 19, "product_order 0 1 2");
    auto fails = verify_catalog_entry(parse_catalog_entry(scrambled));
    bool names_product = std::any_of(fails.begin(), fails.end(), [](const std::string& f) {
        return f.find("product relation") != std::string::npos;
    });
    CHECK(names_product);

    std::string duplicated = text;
    duplicated.replace(pos, 19, "product_order 2 2 0");
    fails = verify_catalog_entry(parse_catalog_entry(duplicated));
    bool names_order = std::any_of(fails.begin(), fails.end(), [](const std::string& f) {
        return f.find("product_order") != std::string::npos;
    });
    CHECK(names_order);
}

TEST_CASE("published matrices satisfy their local predictions") {
    for (int id : all_ids()) {
        CAPTURE(id);
        const CatalogEntry& e = load(id);
        for (const auto& [lbl, m] : e.published_matrices()) {
            CAPTURE(lbl);
            CHECK(m.det() == 1);
            const RiemannEntry* re = e.riemann().find(e.point(lbl));
            REQUIRE(re != nullptr);
            // Unipotency order from the kind: MUM and C(1) are unipotent,
            // K(n)/C(n)/F read off their n.
            if (re->kind.type == SingularityKind::Type::C && re->kind.n == 2) {
                QMat4 n = m.pow(2) - QMat4::identity();
                CHECK(n.rank() == 1);
            }
        }
    }
}
