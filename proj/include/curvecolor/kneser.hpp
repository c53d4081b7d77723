#pragma once

#include <curvecolor/graph.hpp>
#include <curvecolor/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace curvecolor::kneser
{
    /// Subsets of {1..n} as bitmasks, element i at bit i-1. n <= 30.
    using SubsetMask = std::uint32_t;

    auto subset_label(SubsetMask subset) -> std::string;
    auto subset_elements(SubsetMask subset) -> std::vector<int>;
    auto mask_of(const std::vector<int> & elements) -> SubsetMask;

    /// A two-part partition of {1..n}, stored by its smaller part. At
    /// |A| = n/2 the part containing 1 is stored.
    class PartitionVertex
    {
    public:
        /// Canonicalises either part. Throws std::invalid_argument when the
        /// part is empty or all of {1..n}.
        PartitionVertex(int n, SubsetMask either_part);

        [[nodiscard]] auto n() const -> int { return _n; }
        [[nodiscard]] auto part() const -> SubsetMask { return _part; }
        [[nodiscard]] auto complement() const -> SubsetMask;
        [[nodiscard]] auto part_size() const -> int;
        [[nodiscard]] auto label() const -> std::string { return subset_label(_part); }

        auto operator<=>(const PartitionVertex &) const = default;

    private:
        int _n;
        SubsetMask _part;
    };

    /// Two partitions are nested when one of A n C, A n D, B n C, B n D is empty.
    auto nested(const PartitionVertex & x, const PartitionVertex & y) -> bool;

    /// Cyclic-interval partition label (i, j), 1 <= i < j <= n: the residues
    /// of l and l + k for the interval l + {1..k}. The two parts are the arcs
    /// {i+1..j} and {j+1..i} (mod n).
    struct CyclicLabel
    {
        int i;
        int j;

        auto operator<=>(const CyclicLabel &) const = default;
    };

    auto linked(const CyclicLabel & x, const CyclicLabel & y) -> bool;
    auto partition_of(int n, const CyclicLabel & label) -> PartitionVertex;
    auto cyclic_label_of(const PartitionVertex & v) -> CyclicLabel;
    auto to_string(const CyclicLabel & label) -> std::string;

    /// Cyclic shift of {1..k} starting at `start` (1-based), as a mask.
    auto cyclic_interval(int n, int k, int start) -> SubsetMask;

    /// A graph together with the partition (or subset) behind each vertex.
    struct SubsetGraph
    {
        int n;
        std::vector<SubsetMask> subsets;
        Graph graph;
    };

    auto build_kg(int n, int k) -> SubsetGraph;
    auto build_cg(int n, int k) -> SubsetGraph;

    /// Total Kneser graph: all partitions of {1..n} (2^(n-1) - 1 of them),
    /// ordered by part size then lexicographically; edges join distinct nested
    /// partitions.
    auto build_total_kg(int n) -> SubsetGraph;

    struct TotalCyclicGraph
    {
        int n;
        std::vector<CyclicLabel> labels;
        std::vector<SubsetMask> subsets;
        Graph graph;
    };

    /// Vertices are the pairs (i, j) in lexicographic order; edges join
    /// unlinked pairs. Graph labels are the stored parts in set notation, so
    /// they match build_total_kg's labels.
    auto build_total_cg(int n) -> TotalCyclicGraph;

    /// Colour (k, a) for |A| = 2^(k+1) - l with 1 <= l <= 2^k and a the l-th
    /// largest element of A; when n is a power of two the n/2 layer shares one
    /// extra colour.
    struct TotalColor
    {
        int k = 0;
        int a = 0;
        bool middle = false;

        auto operator<=>(const TotalColor &) const = default;
    };

    auto total_coloring(const PartitionVertex & v) -> TotalColor;

    /// ceil(log2(n/2)) for n >= 2.
    auto total_coloring_layers(int n) -> int;

    /// n * ceil(log2(n/2)), plus one when n is a power of two.
    auto total_coloring_palette_size(int n) -> std::size_t;

    /// Dense colour id: k * n + (a - 1), and layers * n for the middle colour.
    auto color_id(int n, const TotalColor & c) -> int;

    auto total_coloring_of(const SubsetGraph & total_kg) -> Coloring;

    /// Kneser's colouring: min(A) if min(A) <= n - 2k + 1, else n - 2k + 2.
    auto classical_kneser_coloring(int n, int k, SubsetMask subset) -> int;

    /// Colours 1..n-2k+2 shifted to ids 0..n-2k+1.
    auto classical_kneser_coloring_of(const SubsetGraph & kg, int k) -> Coloring;

    /// H_m as an exact rational, H_0 = 0.
    auto harmonic(int m) -> Rational;

    /// n * H_floor((n-1)/2) + (1 - n mod 2).
    auto total_fractional_value(int n) -> Rational;
}
