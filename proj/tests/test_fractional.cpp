#include <curvecolor/fractional.hpp>
#include <curvecolor/kneser.hpp>

#include <doctest.h>

using namespace curvecolor;
using namespace curvecolor::fractional;

TEST_CASE("fractional colouring verification")
{
    auto k2 = Graph::complete(2);
    CHECK(verify_fractional_coloring(k2, {{{{0}, 1}, {{1}, 1}}}) == 2);
    CHECK_THROWS_AS(verify_fractional_coloring(k2, {{{{0, 1}, 1}}}), CertificateError);
    CHECK_THROWS_AS(verify_fractional_coloring(k2, {{{{0}, 1}}}), CertificateError);
    CHECK_THROWS_AS(verify_fractional_coloring(k2, {{{{0}, 1}, {{1}, 0}}}), CertificateError);

    auto kg = kneser::build_kg(5, 2);
    CHECK(verify_fractional_coloring(kg.graph, kg_fractional_coloring(5, 2)) == Rational(5, 2));
    CHECK(verify_fractional_coloring(kneser::build_total_kg(6).graph, kg_total_fractional_coloring(6)) == 10);
    CHECK(verify_fractional_coloring(kneser::build_total_kg(2).graph, kg_total_fractional_coloring(2)) == 1);
}

TEST_CASE("fractional clique verification")
{
    CHECK(verify_fractional_clique(Graph::complete(3), {{1, 1, 1}}) == 3);
    CHECK_THROWS_AS(verify_fractional_clique(Graph::edgeless(2), {{1, 1}}), CertificateError);
    CHECK_THROWS_AS(verify_fractional_clique(Graph::complete(2), {{1, -1}}), CertificateError);
    CHECK(verify_fractional_clique(kneser::build_total_cg(6).graph, cg_total_fractional_clique(6)) == 10);
    CHECK(verify_fractional_clique(kneser::build_total_cg(5).graph, cg_total_fractional_clique(5)) == Rational(15, 2));
    CHECK(verify_fractional_clique(kneser::build_cg(7, 2).graph, cg_fractional_clique(7, 2)) == Rational(7, 2));
}

TEST_CASE("sandwich for Kneser pairs")
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto upper = verify_fractional_coloring(kneser::build_kg(n, k).graph, kg_fractional_coloring(n, k));
            auto lower = verify_fractional_clique(kneser::build_cg(n, k).graph, cg_fractional_clique(n, k));
            CHECK(upper == Rational(n, k));
            CHECK(lower == Rational(n, k));
        }
}

TEST_CASE("sandwich for total graphs")
{
    for (int n = 4; n <= 10; ++n) {
        auto upper = verify_fractional_coloring(kneser::build_total_kg(n).graph, kg_total_fractional_coloring(n));
        auto lower = verify_fractional_clique(kneser::build_total_cg(n).graph, cg_total_fractional_clique(n));
        CHECK(upper == lower);
        CHECK(upper == kneser::total_fractional_value(n));
    }
}

TEST_CASE("four-holed sphere profiles")
{
    auto check = four_holed_sphere_profiles();
    CHECK(sigma4_fractional_check(check) == Rational(22, 3));
    auto loads = profile_loads(check);
    REQUIRE(loads.size() == 5);
    CHECK(loads[0] == 1);
    CHECK(loads[4] == 1);
    for (const auto & l : loads)
        CHECK(l <= 1);

    auto heavy = check;
    heavy.weights[0] = 1;
    CHECK_THROWS_AS(sigma4_fractional_check(heavy), CertificateError);
}

TEST_CASE("certificate JSON round trip")
{
    auto g = kneser::build_total_kg(7).graph;
    auto fc = kg_total_fractional_coloring(7);
    auto back = coloring_from_json(g, coloring_to_json(g, fc));
    CHECK(verify_fractional_coloring(g, back) == verify_fractional_coloring(g, fc));

    auto cg = kneser::build_total_cg(7).graph;
    auto w = cg_total_fractional_clique(7);
    CHECK(clique_from_json(cg, clique_to_json(cg, w)).weights == w.weights);
}
