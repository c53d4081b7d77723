#include <curvecolor/kneser.hpp>
#include <curvecolor/search.hpp>
#include <curvecolor/special_graphs.hpp>

#include <doctest.h>

#include <set>

using namespace curvecolor;
using namespace curvecolor::special;

TEST_CASE("Farey lines")
{
    CHECK(make_line(-2, -4) == FareyLine{1, 2});
    CHECK(make_line(-3, 0) == FareyLine{1, 0});
    CHECK(make_line(0, -5) == FareyLine{0, 1});
    CHECK(to_string(make_line(3, -6)) == "(-1:2)");
    CHECK_THROWS_AS(make_line(0, 0), std::invalid_argument);
}

TEST_CASE("Farey truncations")
{
    auto f1 = build_farey(1, false);
    CHECK(f1.lines == std::vector<FareyLine>{{-1, 1}, {0, 1}, {1, 0}, {1, 1}});
    auto tri = VertexSet{*f1.graph.index_of("(1:0)"), *f1.graph.index_of("(0:1)"), *f1.graph.index_of("(1:1)")};
    CHECK(f1.graph.is_clique(tri));
    CHECK_FALSE(f1.graph.adjacent(*f1.graph.index_of("(1:1)"), *f1.graph.index_of("(-1:1)")));

    auto e1 = build_farey(1, true);
    CHECK(e1.graph.is_clique({0, 1, 2, 3}));

    for (int n = 1; n <= 8; ++n)
        CHECK(clique_number(build_farey(n, false).graph).clique_number == 3);
    CHECK_THROWS_AS(build_farey(0, false), std::invalid_argument);
}

TEST_CASE("reduction colourings are proper")
{
    CHECK(farey_mod_coloring({1, 0}, 3) == 0);
    CHECK(projective_point_label(farey_mod_coloring({1, 0}, 3), 3) == "(1:0)");
    CHECK(farey_mod_coloring({2, 3}, 3) == 0);
    CHECK(farey_mod_coloring({5, 3}, 2) == 2);
    CHECK_THROWS_AS(farey_mod_coloring({1, 1}, 5), std::invalid_argument);

    for (int n : {1, 3, 7, 20}) {
        auto f = build_farey(n, false);
        auto fp = build_farey(n, true);
        auto mod2 = farey_mod_coloring_of(f, 2);
        auto mod3 = farey_mod_coloring_of(fp, 3);
        CHECK(is_proper(f.graph, mod2));
        CHECK(is_proper(fp.graph, mod3));
        CHECK(mod2.palette_size() == 3);
        CHECK(mod3.palette_size() == 4);
    }
    CHECK(chromatic_number(build_farey(6, true).graph).chromatic_number == 4);
    CHECK(chromatic_number(build_farey(6, false).graph).chromatic_number == 3);
}

TEST_CASE("PSL(2,Z) acts compatibly with the colours")
{
    CHECK_THROWS_AS(psl2_action({2, 0, 0, 1}, {1, 0}), std::invalid_argument);
    CHECK(psl2_action({0, -1, 1, 0}, {1, 0}) == FareyLine{0, 1});

    auto lines = build_farey(6, true).lines;
    const Matrix2 identity{1, 0, 0, 1}, level3{1, 3, 0, 1}, level3b{1, 0, -3, 1}, t{1, 1, 0, 1}, s{0, -1, 1, 0};
    for (const auto & l : lines) {
        auto c = farey_mod_coloring(l, 3);
        CHECK(farey_mod_coloring(psl2_action(identity, l), 3) == c);
        CHECK(farey_mod_coloring(psl2_action(level3, l), 3) == c);
        CHECK(farey_mod_coloring(psl2_action(level3b, l), 3) == c);
        CHECK(farey_mod_coloring(psl2_action(t, l), 3) == psl2_color_action(t, c, 3));
        CHECK(farey_mod_coloring(psl2_action(s, l), 3) == psl2_color_action(s, c, 3));
        CHECK(farey_mod_coloring(psl2_action(s, l), 2) == psl2_color_action(s, farey_mod_coloring(l, 2), 2));
    }
    // T mod 3 fixes (1:0) and cycles the other three points.
    CHECK(psl2_color_action(t, 0, 3) == 0);
    CHECK(psl2_color_action(t, 1, 3) == 2);
    CHECK(psl2_color_action(t, 2, 3) == 3);
    CHECK(psl2_color_action(t, 3, 3) == 1);
}

TEST_CASE("det-2 pairs split into unimodular pairs")
{
    for (int n : {2, 5, 12})
        CHECK(check_det2_reconstruction(build_farey(n, true)) > 0);
}

TEST_CASE("symplectic graphs")
{
    auto sp4 = build_sp(4);
    CHECK(sp4.size() == 15);
    CHECK(srg_parameters(sp4) == SrgParameters{15, 6, 1, 3});
    auto sp2 = build_sp(2);
    CHECK(sp2.size() == 3);
    CHECK(sp2.edge_count() == 0);
    CHECK(build_sp(6).size() == 63);
    CHECK_THROWS_AS(build_sp(3), std::invalid_argument);
}

TEST_CASE("strong regularity")
{
    CHECK(srg_parameters(kneser::build_kg(6, 2).graph) == SrgParameters{15, 6, 1, 3});
    CHECK(srg_parameters(kneser::build_kg(5, 2).graph) == SrgParameters{10, 3, 0, 1});
    CHECK_FALSE(srg_parameters(Graph::path(3)));
}

TEST_CASE("the pair map into Sp(4)")
{
    std::set<std::uint32_t> images;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            auto x = phi_map(i, j);
            CHECK(x != 0);
            images.insert(x);
            for (int k = 1; k <= 6; ++k)
                for (int l = k + 1; l <= 6; ++l)
                    CHECK(symplectic_form(x, phi_map(k, l), 4) == pair_pairing({i, j}, {k, l}));
        }
    CHECK(images.size() == 15);
    CHECK(pair_pairing({1, 2}, {3, 4}) == 0);
    CHECK(pair_pairing({1, 2}, {2, 3}) == 1);
    CHECK_THROWS_AS(phi_map(2, 2), std::invalid_argument);

    auto kg = kneser::build_kg(6, 2).graph;
    CHECK(is_isomorphism(kg, build_sp(4), phi_vertex_map()));
    CHECK(phi_graph().edges() == kg.edges());
}

TEST_CASE("octahedron graphs")
{
    auto o = build_octahedron_graphs();
    CHECK(o.n.size() == 12);
    CHECK(o.c.size() == 16);
    for (VertexIndex v = 12; v < 16; ++v)
        CHECK(o.c.degree(v) == 6);
    CHECK(chromatic_number(o.c).chromatic_number == 5);

    std::size_t largest = 0;
    std::vector<VertexSet> maximum;
    for (const auto & s : maximal_independent_sets(o.c)) {
        if (s.size() > largest) {
            largest = s.size();
            maximum.clear();
        }
        if (s.size() == largest)
            maximum.push_back(s);
    }
    CHECK(largest == 4);
    // Six vertex stars and the set of circles.
    CHECK(maximum.size() == 7);
    for (const auto & s : maximum) {
        if (s.front() >= 12) {
            CHECK(s == VertexSet{12, 13, 14, 15});
            continue;
        }
        std::vector<int> count(7, 0);
        for (auto v : s) {
            REQUIRE(v < 12);
            ++count[o.edges[v].first];
            ++count[o.edges[v].second];
        }
        CHECK(std::count(count.begin(), count.end(), 4) == 1);
    }
}

TEST_CASE("bounds table")
{
    CHECK(bounds_table(2).sp_bound == 15);
    CHECK(bounds_table(3).sp_bound == 126);
    CHECK(bounds_table(2).upper == 32);
    CHECK(bounds_table(2).g_log_g_text == "1.386294");
    CHECK_THROWS_AS(bounds_table(1), std::invalid_argument);
}
