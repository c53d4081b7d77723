#include <curvecolor/kneser.hpp>
#include <curvecolor/report.hpp>
#include <curvecolor/search.hpp>
#include <curvecolor/special_graphs.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace curvecolor;

namespace
{
    auto petersen() -> Graph
    {
        return kneser::build_kg(5, 2).graph;
    }

    auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                adj[u][v] = adj[v][u] = coin(rng);
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < n; ++v)
            labels.push_back(std::to_string(v));
        return Graph::from_predicate(labels, [&](VertexIndex u, VertexIndex v) { return adj[u][v]; });
    }

    // Smallest k with a proper k-colouring, by trying every assignment.
    auto brute_chromatic(const Graph & g) -> std::size_t
    {
        auto n = g.size();
        if (n == 0)
            return 0;
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<int> c(n, 0);
            while (true) {
                if (is_proper(g, Coloring{c}))
                    return k;
                std::size_t i = 0;
                while (i < n && c[i] == static_cast<int>(k) - 1)
                    c[i++] = 0;
                if (i == n)
                    break;
                ++c[i];
            }
        }
        return n;
    }

    auto brute_clique(const Graph & g) -> std::size_t
    {
        std::size_t best = 0;
        for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
            VertexSet s;
            for (VertexIndex v = 0; v < g.size(); ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            if (g.is_clique(s))
                best = std::max(best, s.size());
        }
        return best;
    }
}

TEST_CASE("graph construction rejects bad input")
{
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), std::invalid_argument);
    Graph g({"a", "b", "c"}, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.index_of("c") == 2);
    CHECK_FALSE(g.index_of("z"));
}

TEST_CASE("complement and induced subgraphs")
{
    auto p = petersen();
    auto c = p.complement();
    CHECK(c.edge_count() == 45 - 15);
    auto sub = p.induced_subgraph({0, 1, 2, 3});
    CHECK(sub.size() == 4);
    CHECK(sub.label(3) == p.label(3));
}

TEST_CASE("is_proper")
{
    auto k2 = Graph::complete(2);
    CHECK_FALSE(is_proper(k2, Coloring{{0, 0}}));
    CHECK(is_proper(k2, Coloring{{0, 1}}));
    CHECK_THROWS_AS(is_proper(k2, Coloring{{0}}), std::invalid_argument);
    auto total = kneser::build_total_kg(6);
    CHECK(is_proper(total.graph, kneser::total_coloring_of(total)));
}

TEST_CASE("chromatic number on known graphs")
{
    CHECK(chromatic_number(petersen()).chromatic_number == 3);
    CHECK(chromatic_number(Graph::edgeless(5)).chromatic_number == 1);
    CHECK(chromatic_number(Graph::complete(1)).chromatic_number == 1);
    CHECK(chromatic_number(Graph{}).chromatic_number == 0);
    CHECK(chromatic_number(special::build_octahedron_graphs().n).chromatic_number == 4);
    CHECK(chromatic_number(kneser::build_kg(7, 3).graph).chromatic_number == 3);

    auto r = chromatic_number(petersen());
    CHECK(is_proper(petersen(), r.witness));
    CHECK(r.witness.palette_size() == 3);
}

TEST_CASE("exact solvers agree with brute force on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(4 + seed % 6, 0.2 + 0.015 * static_cast<double>(seed), seed);
        auto chi = chromatic_number(g);
        auto omega = clique_number(g);
        CHECK(chi.chromatic_number == brute_chromatic(g));
        CHECK(omega.clique_number == brute_clique(g));
        CHECK(g.is_clique(omega.witness));
        CHECK(omega.clique_number <= chi.chromatic_number);
        CHECK(is_proper(g, chi.witness));
    }
}

TEST_CASE("clique number")
{
    CHECK(clique_number(petersen()).clique_number == 2);
    CHECK(clique_number(Graph::complete(6)).clique_number == 6);
    CHECK(clique_number(special::build_farey(2, true).graph).clique_number == 4);
}

TEST_CASE("budget exhaustion is reported, never a wrong answer")
{
    CHECK_THROWS_AS(chromatic_number(special::build_octahedron_graphs().c, SearchBudget{10}), BudgetExhausted);
    CHECK_THROWS_AS(maximal_independent_sets(petersen(), SearchBudget{3}), BudgetExhausted);
}

TEST_CASE("maximal independent sets")
{
    auto k3 = maximal_independent_sets(Graph::complete(3));
    CHECK(k3 == std::vector<VertexSet>{{0}, {1}, {2}});

    auto sets = maximal_independent_sets(petersen());
    std::size_t largest = 0, count_largest = 0;
    for (const auto & s : sets) {
        CHECK(petersen().is_independent(s));
        if (s.size() > largest) {
            largest = s.size();
            count_largest = 0;
        }
        if (s.size() == largest)
            ++count_largest;
    }
    CHECK(largest == 4);
    CHECK(count_largest == 5);
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("maximal independent sets of CG(5) are pairwise linked")
{
    auto cg = kneser::build_total_cg(5);
    for (const auto & s : maximal_independent_sets(cg.graph))
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(kneser::linked(cg.labels[s[i]], cg.labels[s[j]]));
}

TEST_CASE("maximal cliques are exactly the maximal ones")
{
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto g = random_graph(9, 0.5, seed);
        auto cliques = maximal_cliques(g);
        for (const auto & c : cliques) {
            CHECK(g.is_clique(c));
            for (VertexIndex v = 0; v < g.size(); ++v) {
                if (std::find(c.begin(), c.end(), v) != c.end())
                    continue;
                auto bigger = c;
                bigger.push_back(v);
                CHECK_FALSE(g.is_clique(bigger));
            }
        }
    }
}

TEST_CASE("isomorphism search")
{
    auto k3 = Graph::complete(3);
    auto m = find_isomorphism(k3, k3);
    REQUIRE(m);
    CHECK(is_isomorphism(k3, k3, *m));

    CHECK(find_isomorphism(special::build_sp(4), kneser::build_kg(6, 2).graph));

    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i)
        labels.push_back(std::to_string(i));
    auto crown = Graph::from_predicate(labels, [](VertexIndex u, VertexIndex v) {
        return (u < 5) != (v < 5) && u % 5 != v % 5;
    });
    CHECK(crown.edge_count() == 20);
    CHECK_FALSE(find_isomorphism(petersen(), crown));
    CHECK_FALSE(find_isomorphism(petersen(), Graph::complete(10)));
}

TEST_CASE("cores")
{
    auto count = count_endomorphisms(petersen());
    CHECK(count.endomorphisms == 120);
    CHECK(count.automorphisms == 120);
    CHECK(is_core(petersen()));
    CHECK(is_core(Graph::complete(2)));
    CHECK(count_endomorphisms(Graph::complete(2)).endomorphisms == 2);
    CHECK_FALSE(is_core(Graph::path(3)));
}

TEST_CASE("maximal clique graph")
{
    auto k4 = max_clique_graph(Graph::complete(4));
    CHECK(k4.cliques.size() == 1);
    CHECK(k4.edge_count() == 0);

    Graph diamond({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto two = max_clique_graph(diamond);
    CHECK(two.cliques.size() == 2);
    CHECK(two.adjacent(0, 1));

    auto p = max_clique_graph(petersen());
    CHECK(p.cliques.size() == 15);
    // Edges of a cubic graph sharing an endpoint: 10 vertices x C(3,2).
    CHECK(p.edge_count() == 30);
}

TEST_CASE("unique colouring propagation")
{
    for (int length = 1; length <= 10; ++length) {
        auto g = report::triangle_strip(length);
        auto result = propagate_unique_coloring(g, 3, {0, 1, 2});
        REQUIRE(std::holds_alternative<Coloring>(result));
        auto c = std::get<Coloring>(result);
        CHECK(c.colors[0] == 0);
        CHECK(c.colors[2] == 2);
        CHECK(canonical_partition(c) == canonical_partition(chromatic_number(g).witness));
    }

    auto k4 = propagate_unique_coloring(Graph::complete(4), 4, {0, 1, 2, 3});
    CHECK(std::holds_alternative<Coloring>(k4));

    auto p = petersen();
    auto [u, v] = p.edges().front();
    auto bad = propagate_unique_coloring(p, 2, {u, v});
    REQUIRE(std::holds_alternative<PropagationObstruction>(bad));
    CHECK(std::get<PropagationObstruction>(bad).kind == PropagationObstruction::Kind::contradiction);

    CHECK_THROWS_AS(propagate_unique_coloring(p, 3, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(propagate_unique_coloring(report::triangle_strip(2), 3, {0, 1}), std::invalid_argument);

    // A triangle with a pendant edge is not pure.
    Graph impure({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto r = propagate_unique_coloring(impure, 3, {0, 1, 2});
    REQUIRE(std::holds_alternative<PropagationObstruction>(r));
    CHECK(std::get<PropagationObstruction>(r).kind == PropagationObstruction::Kind::impure);

    // Two triangles sharing one vertex: pure but the clique graph is disconnected.
    Graph bowtie({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto d = propagate_unique_coloring(bowtie, 3, {0, 1, 2});
    REQUIRE(std::holds_alternative<PropagationObstruction>(d));
    CHECK(std::get<PropagationObstruction>(d).kind == PropagationObstruction::Kind::disconnected);
}
