#include <curvecolor/fractional.hpp>
#include <curvecolor/io.hpp>
#include <curvecolor/kneser.hpp>
#include <curvecolor/special_graphs.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace curvecolor;

namespace
{
    auto data(const std::string & name) -> std::string
    {
        return std::string(CURVECOLOR_TEST_DATA) + "/" + name;
    }
}

TEST_CASE("rationals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(to_string(Rational(10, 4)) == "5/2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("DIMACS round trip")
{
    std::vector<Graph> graphs{kneser::build_kg(5, 2).graph, kneser::build_total_kg(5).graph,
        special::build_octahedron_graphs().c, special::build_farey(3, true).graph, Graph::edgeless(3), Graph{}};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        std::vector<std::string> labels;
        for (int v = 0; v < 12; ++v)
            labels.push_back("v" + std::to_string(v));
        graphs.push_back(Graph::from_predicate(labels, [&](VertexIndex, VertexIndex) { return rng() % 3 == 0; }));
    }
    for (const auto & g : graphs) {
        std::istringstream in(to_dimacs(g));
        auto back = read_dimacs(in);
        CHECK(back.labels() == g.labels());
        CHECK(back.edges() == g.edges());
        CHECK(to_dimacs(back) == to_dimacs(g));
    }
}

TEST_CASE("DIMACS input errors")
{
    auto g = read_dimacs_file(data("unlabeled.col"));
    CHECK(g.size() == 4);
    CHECK(g.label(3) == "4");
    CHECK(g.edge_count() == 4);

    auto parse = [](const std::string & text) {
        std::istringstream in(text);
        return read_dimacs(in);
    };
    CHECK_THROWS_AS(parse("e 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse("p edge 2 2\ne 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n"), FormatError);
    CHECK_THROWS_AS(parse("p edge 2 1\nx\n"), FormatError);
    CHECK_THROWS_AS(read_dimacs_file(data("missing.col")), std::runtime_error);
}

TEST_CASE("colouring JSON round trip")
{
    auto kg = kneser::build_total_kg(6);
    auto c = kneser::total_coloring_of(kg);
    auto j = coloring_to_json(kg.graph, c);
    CHECK(j["palette_size"] == c.palette_size());
    CHECK(coloring_from_json(kg.graph, j).colors == c.colors);
    CHECK_THROWS_AS(coloring_from_json(kg.graph, nlohmann::json{{"colors", {{"nope", 1}}}}), FormatError);
}

TEST_CASE("certificates from files")
{
    auto g = kneser::build_kg(5, 2).graph;
    auto fc = fractional::coloring_from_json(g, read_json_file(data("kg52_fractional_coloring.json")));
    CHECK(fractional::verify_fractional_coloring(g, fc) == Rational(5, 2));
    auto bad = fractional::coloring_from_json(g, read_json_file(data("kg52_bad_coloring.json")));
    CHECK_THROWS_AS(fractional::verify_fractional_coloring(g, bad), fractional::CertificateError);
}
