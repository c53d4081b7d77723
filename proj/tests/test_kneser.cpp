#include <curvecolor/kneser.hpp>
#include <curvecolor/search.hpp>

#include <doctest.h>

using namespace curvecolor;
using namespace curvecolor::kneser;

TEST_CASE("Kneser graph sizes")
{
    auto p = build_kg(5, 2);
    CHECK(p.graph.size() == 10);
    CHECK(p.graph.edge_count() == 15);
    CHECK(build_kg(2, 1).graph.edge_count() == 1);
    auto m = build_kg(6, 3).graph;
    CHECK(m.size() == 20);
    CHECK(m.edge_count() == 10);
    for (VertexIndex v = 0; v < m.size(); ++v)
        CHECK(m.degree(v) == 1);
    CHECK_THROWS_AS(build_kg(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_kg(4, 0), std::invalid_argument);
}

TEST_CASE("cyclic interval graphs")
{
    auto c5 = build_cg(5, 2).graph;
    CHECK(c5.size() == 5);
    CHECK(c5.edge_count() == 5);
    for (VertexIndex v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(build_cg(4, 2).graph.edge_count() == 2);
    CHECK(build_cg(6, 1).graph.edge_count() == 15);
    CHECK(cyclic_interval(5, 2, 5) == mask_of({5, 1}));
}

TEST_CASE("exact chromatic numbers of Kneser and cyclic interval graphs")
{
    CHECK(chromatic_number(build_kg(6, 2).graph).chromatic_number == 4);
    CHECK(chromatic_number(build_kg(7, 2).graph).chromatic_number == 5);
    CHECK(chromatic_number(build_cg(7, 3).graph).chromatic_number == 3);
    CHECK(chromatic_number(build_cg(9, 2).graph).chromatic_number == 5);
}

TEST_CASE("partition vertices")
{
    PartitionVertex a(6, mask_of({4, 5, 6}));
    CHECK(a.part() == mask_of({1, 2, 3}));
    CHECK(a.label() == "{1,2,3}");
    PartitionVertex b(5, mask_of({2, 3, 4}));
    CHECK(b.part() == mask_of({1, 5}));
    CHECK(b.part_size() == 2);
    CHECK(b.complement() == mask_of({2, 3, 4}));
    CHECK_THROWS_AS(PartitionVertex(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(PartitionVertex(4, mask_of({1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("total Kneser graph")
{
    auto k4 = build_total_kg(4);
    CHECK(k4.graph.size() == 7);
    auto k2 = build_total_kg(2);
    CHECK(k2.graph.size() == 1);
    CHECK(k2.graph.edge_count() == 0);
    // Every two distinct partitions of a 3-set are nested.
    auto k3 = build_total_kg(3);
    CHECK(k3.graph.size() == 3);
    CHECK(k3.graph.edge_count() == 3);
    CHECK(build_total_kg(5).graph.size() == 15);
}

TEST_CASE("total cyclic interval graph")
{
    auto c4 = build_total_cg(4);
    CHECK(c4.graph.size() == 6);
    CHECK(linked({1, 3}, {2, 4}));
    CHECK_FALSE(linked({1, 2}, {3, 4}));
    auto c5 = build_total_cg(5);
    auto i13 = std::find(c5.labels.begin(), c5.labels.end(), CyclicLabel{1, 3}) - c5.labels.begin();
    auto i24 = std::find(c5.labels.begin(), c5.labels.end(), CyclicLabel{2, 4}) - c5.labels.begin();
    auto i12 = std::find(c5.labels.begin(), c5.labels.end(), CyclicLabel{1, 2}) - c5.labels.begin();
    auto i34 = std::find(c5.labels.begin(), c5.labels.end(), CyclicLabel{3, 4}) - c5.labels.begin();
    CHECK_FALSE(c5.graph.adjacent(i13, i24));
    CHECK(c5.graph.adjacent(i12, i34));

    for (int n = 2; n <= 9; ++n) {
        auto cg = build_total_cg(n);
        for (std::size_t v = 0; v < cg.labels.size(); ++v)
            CHECK(cyclic_label_of(partition_of(n, cg.labels[v])) == cg.labels[v]);
    }
}

TEST_CASE("unlinked labels are exactly nested partitions")
{
    for (int n = 3; n <= 9; ++n) {
        auto cg = build_total_cg(n);
        for (std::size_t u = 0; u < cg.labels.size(); ++u)
            for (std::size_t v = u + 1; v < cg.labels.size(); ++v)
                CHECK(! linked(cg.labels[u], cg.labels[v]) ==
                    nested(partition_of(n, cg.labels[u]), partition_of(n, cg.labels[v])));
    }
}

TEST_CASE("total colouring decomposition")
{
    CHECK(total_coloring(PartitionVertex(15, mask_of({9}))) == TotalColor{0, 9, false});
    CHECK(total_coloring(PartitionVertex(15, mask_of({9, 12}))) == TotalColor{1, 9, false});
    CHECK(total_coloring(PartitionVertex(15, mask_of({2, 5, 9}))) == TotalColor{1, 9, false});
    CHECK(total_coloring(PartitionVertex(6, mask_of({1, 2, 3}))) == TotalColor{1, 3, false});
    CHECK(total_coloring(PartitionVertex(8, mask_of({1, 2, 3, 4}))).middle);
    CHECK(total_coloring_palette_size(8) == 17);
    CHECK(total_coloring_palette_size(6) == 12);
}

TEST_CASE("total colouring is proper")
{
    for (int n = 2; n <= 11; ++n) {
        auto kg = build_total_kg(n);
        auto c = total_coloring_of(kg);
        CHECK(is_proper(kg.graph, c));
        CHECK(c.palette_size() <= total_coloring_palette_size(n));
    }
}

TEST_CASE("classical Kneser colouring")
{
    CHECK(classical_kneser_coloring(5, 2, mask_of({1, 4})) == 1);
    CHECK(classical_kneser_coloring(5, 2, mask_of({3, 5})) == 3);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {6, 2}, {5, 1}}) {
        auto kg = build_kg(n, k);
        auto c = classical_kneser_coloring_of(kg, k);
        CHECK(is_proper(kg.graph, c));
        CHECK(c.palette_size() == static_cast<std::size_t>(n - 2 * k + 2));
    }
}

TEST_CASE("harmonic numbers and fractional values")
{
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic(4) == Rational(25, 12));
    CHECK(total_fractional_value(5) == Rational(15, 2));
    CHECK(total_fractional_value(6) == 10);
    CHECK(total_fractional_value(2) == 1);
}
