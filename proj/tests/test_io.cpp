#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace leibniz;
namespace cat = leibniz::catalog;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = LEIBNIZ_DATA_DIR;

std::string path(const std::string& name) { return data_dir + "/" + name; }

std::vector<std::string> valid_files()
{
    return {"dual_numbers.json", "sl2_pair.json", "pair1.json", "pois3.json", "matrices.json", "broken_jet.json"};
}

void expect_parse_error(const std::string& text, const std::string& where_fragment = "")
{
    try {
        io::parse_document_string(text);
        ADD_FAILURE() << "no ParseError for " << text;
    } catch (const io::ParseError& e) {
        if (!where_fragment.empty())
            EXPECT_NE(std::string(e.where()).find(where_fragment), std::string::npos) << e.where() << " | " << e.what();
    }
}

std::string wrap(const std::string& objects) { return R"({"schema_version": "1", "objects": {)" + objects + "}}"; }

const std::string dual_def =
    R"("DUAL": {"type": "algebra", "kind": "associative", "basis": ["1", "x"], "unit": "1",
        "structure": {"shape": [2, 2, 2], "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}},
       "ZERO": {"type": "algebra", "kind": "lie", "basis": []},
       "P": {"type": "pair", "A": "DUAL", "L": "ZERO"})";

} // namespace

TEST(Io, BundledFilesParse)
{
    for (const auto& f : valid_files())
        EXPECT_NO_THROW(io::load_document(path(f))) << f;
}

TEST(Io, BundledStructuresMatchCatalog)
{
    const auto d = io::load_document(path("dual_numbers.json"));
    EXPECT_EQ(d.algebras.at("DUAL").c, cat::dual().c);
    EXPECT_EQ(d.algebras.at("DUAL").unit_index, std::optional<std::size_t>(0));
    EXPECT_EQ(d.pairs.at("DUAL_L0").pair.L.dim, 0u);

    const auto p = io::load_document(path("pair1.json"));
    EXPECT_EQ(p.pairs.at("PAIR1").pair.mu, cat::pair1().mu);

    const auto s = io::load_document(path("sl2_pair.json"));
    EXPECT_EQ(s.algebras.at("SL2").c, cat::sl2().c);
    EXPECT_TRUE(s.pairs.at("Q_SL2").semisimple);

    const auto m = io::load_document(path("matrices.json"));
    EXPECT_EQ(m.algebras.at("M2").c, cat::matrices2().c);
    EXPECT_EQ(m.pairs.at("M2_SL2").pair.mu, cat::matrix_pair().mu);
    EXPECT_EQ(m.poissons.at("M2_commutator").poisson.bracket, cat::matrix_poisson().bracket);

    const auto q = io::load_document(path("pois3.json"));
    EXPECT_EQ(q.poissons.at("POIS3").poisson.bracket, cat::pois3().bracket);
    EXPECT_EQ(q.poissons.at("POIS3").poisson.A.c, cat::three_dim().c);
    EXPECT_TRUE(q.poissons.at("DUAL_zero_bracket").poisson.bracket.is_zero());
}

TEST(Io, JetsAndEquivalences)
{
    const auto d = io::load_document(path("dual_numbers.json"));
    const auto& j = d.jets.at("x_squared_is_t").jet;
    EXPECT_EQ(j.order, 1);
    EXPECT_EQ(j.alpha_at(1)(1, 1, 0), 1);
    EXPECT_EQ(d.jets.at("zero_jet").jet.order, 3);
    EXPECT_TRUE(d.jets.at("zero_jet").jet.is_zero());

    const auto p = io::load_document(path("pair1.json"));
    const auto& e = p.equivalences.at("euler_rescaling").eq;
    EXPECT_EQ(e.order, 2);
    EXPECT_EQ(e.phi[0](1, 1), Rational(1, 2));
    EXPECT_TRUE(e.phi[1].is_zero());

    const auto q = io::load_document(path("pois3.json"));
    EXPECT_EQ(q.jets.at("POIS3_zero_jet").jet.branch, Branch::poisson);
}

TEST(Io, NamesKeepFileOrder)
{
    const auto d = io::load_document(path("dual_numbers.json"));
    ASSERT_GE(d.names.size(), 3u);
    EXPECT_EQ(d.names[0].first, "DUAL");
    EXPECT_EQ(d.names[1].first, "ZERO");
    EXPECT_EQ(d.type_of("DUAL_L0"), std::optional<std::string>("pair"));
    EXPECT_FALSE(d.type_of("nope"));
}

TEST(Io, RoundTrip)
{
    for (const auto& f : valid_files()) {
        const auto d = io::load_document(path(f));
        const auto text = io::to_json(d).dump(2);
        const auto d2 = io::parse_document_string(text);
        EXPECT_EQ(io::to_json(d2).dump(2), text) << f;
        EXPECT_EQ(d2.names, d.names) << f;
        for (const auto& [name, A] : d.algebras)
            EXPECT_EQ(d2.algebras.at(name).c, A.c);
        for (const auto& [name, j] : d.jets)
            EXPECT_EQ(d2.jets.at(name).jet, j.jet);
    }
}

TEST(Io, DenseAndSparseAgree)
{
    const auto dense = io::parse_document_string(wrap(
        R"("A": {"type": "algebra", "kind": "associative", "basis": ["1", "x"],
                 "structure": [[["1", "0"], ["0", "1"]], [["0", 1], ["0", "0"]]]})"));
    EXPECT_EQ(dense.algebras.at("A").c, cat::dual().c);
}

TEST(Io, SparseEntriesAccumulate)
{
    const auto d = io::parse_document_string(wrap(
        R"("A": {"type": "algebra", "kind": "lie", "basis": ["a", "b"],
                 "structure": {"shape": [2, 2, 2], "entries": [[0, 1, 0, "1/2"], [0, 1, 0, "1/2"], [1, 0, 0, "-1"]]}})"));
    EXPECT_EQ(d.algebras.at("A").c(0, 1, 0), 1);
}

TEST(Io, ExplicitModule)
{
    const auto d = io::parse_document_string(wrap(dual_def + R"(,
        "M": {"type": "module", "pair": "P", "M_dim": 2, "P_dim": 0,
              "left_act": {"shape": [2, 2, 2], "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]},
              "right_act": {"shape": [2, 2, 2], "entries": [[0, 0, 0, "1"], [1, 0, 1, "1"], [0, 1, 1, "1"]]}})"));
    const auto& m = d.modules.at("M");
    EXPECT_FALSE(m.self);
    EXPECT_EQ(m.module.M_dim, 2u);
    EXPECT_EQ(m.module.left_act, cat::dual().c);
}

TEST(Io, Errors)
{
    expect_parse_error("{");
    expect_parse_error(R"({"objects": {}})");
    expect_parse_error(wrap(R"("A": {"type": "widget"})"), "A");
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "jordan", "basis": ["a"]})"), "A");
    // floats are never accepted as rationals
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "lie", "basis": ["a"], "structure": [[[0.5]]]})"),
                       "A");
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "lie", "basis": ["a"], "structure": [[["1/0"]]]})"),
                       "A");
    // shape mismatch
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "lie", "basis": ["a"],
                                     "structure": {"shape": [2, 2, 2], "entries": []}})"),
                       "A");
    // index outside the shape
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "lie", "basis": ["a"],
                                     "structure": {"shape": [1, 1, 1], "entries": [[0, 0, 3, "1"]]}})"),
                       "A");
    // dangling reference
    expect_parse_error(wrap(R"("P": {"type": "pair", "A": "nowhere", "L": "nothing"})"), "P");
    // wrong type behind a reference
    expect_parse_error(wrap(dual_def + R"(, "Q": {"type": "pair", "A": "ZERO", "L": "DUAL"})"), "Q");
    // unit label not in the basis
    expect_parse_error(wrap(R"("A": {"type": "algebra", "kind": "associative", "basis": ["1"], "unit": "e"})"), "A");
    // Poisson jets and equivalences have no separate mu / psi
    const std::string pois = R"("A3": {"type": "algebra", "kind": "associative", "basis": ["1"], "structure": [[["1"]]]},
                                "PP": {"type": "poisson", "A": "A3"})";
    expect_parse_error(wrap(pois + R"(, "J": {"type": "jet", "base": "PP", "order": 1, "mu": []})"), "J");
    expect_parse_error(wrap(pois + R"(, "E": {"type": "equivalence", "base": "PP", "order": 1, "psi": []})"), "E");
    // term list longer than the order
    expect_parse_error(wrap(dual_def + R"(, "J": {"type": "jet", "base": "P", "order": 1,
        "alpha": [{"shape": [2, 2, 2], "entries": []}, {"shape": [2, 2, 2], "entries": []}]})"),
                       "J");
}

TEST(Io, MissingFileNamesThePath)
{
    try {
        io::load_document(path("does_not_exist.json"));
        FAIL();
    } catch (const io::ParseError& e) {
        EXPECT_NE(e.where().find("does_not_exist.json"), std::string::npos);
    }
}

TEST(Io, ErrorLocationIncludesPath)
{
    try {
        io::load_document(path("bad_rational.json"));
        FAIL();
    } catch (const io::ParseError& e) {
        EXPECT_NE(e.where().find("bad_rational.json"), std::string::npos);
        EXPECT_NE(e.where().find("DUAL"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("zero denominator"), std::string::npos);
    }
}
