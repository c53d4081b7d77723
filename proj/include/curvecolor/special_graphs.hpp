#pragma once

#include <curvecolor/graph.hpp>
#include <curvecolor/rational.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvecolor::special
{
    /// A line in Z^2 through the origin, stored as its primitive vector
    /// with q > 0, or (1,0).
    struct FareyLine
    {
        long long p = 1;
        long long q = 0;

        auto operator<=>(const FareyLine &) const = default;
    };

    /// Throws std::invalid_argument for (0,0).
    auto make_line(long long p, long long q) -> FareyLine;
    auto to_string(const FareyLine & line) -> std::string;
    auto determinant(const FareyLine & x, const FareyLine & y) -> long long;

    struct FareyGraph
    {
        int bound = 0;
        bool extended = false;
        std::vector<FareyLine> lines;
        Graph graph;
    };

    /// Lines with max(|p|, q) <= bound; edges at |det| = 1, or |det| in {1,2}
    /// when extended.
    auto build_farey(int bound, bool extended) -> FareyGraph;

    /// Reduction into P^1(F_m), m in {2,3}. Colour 0 is (1:0), colour a+1 is (a:1).
    auto farey_mod_coloring(const FareyLine & line, int m) -> int;
    auto farey_mod_coloring_of(const FareyGraph & farey, int m) -> Coloring;
    auto projective_point_label(int color, int m) -> std::string;

    using Matrix2 = std::array<long long, 4>; // row-major a b / c d

    /// g acting on a line. Throws std::invalid_argument unless det g = 1.
    auto psl2_action(const Matrix2 & g, const FareyLine & line) -> FareyLine;
    /// g reduced mod m acting on a point of P^1(F_m).
    auto psl2_color_action(const Matrix2 & g, int color, int m) -> int;

    /// Pairs at |det| = 2 in the truncation, each checked to split as
    /// (u+v)/2, (u-v)/2 with unit determinant. Returns how many were checked;
    /// throws std::logic_error on a counterexample.
    auto check_det2_reconstruction(const FareyGraph & farey) -> std::size_t;

    /// Nonzero vectors of F_2^{2g}, coordinate t at bit t-1, joined when
    /// orthogonal under the standard symplectic form.
    auto build_sp(int two_g) -> Graph;
    auto symplectic_form(std::uint32_t x, std::uint32_t y, int two_g) -> int;

    struct SrgParameters
    {
        std::size_t v = 0, k = 0, lambda = 0, mu = 0;

        auto operator<=>(const SrgParameters &) const = default;
    };

    auto srg_parameters(const Graph & g) -> std::optional<SrgParameters>;

    /// The pair {i,j} as a vector of F_2^4 in the basis
    /// a1 = e1+e2, b1 = e2+e3, a2 = e4+e5, b2 = e5+e6.
    auto phi_map(int i, int j) -> std::uint32_t;
    /// b(x,y) = |{i,j} n {k,l}| mod 2.
    auto pair_pairing(std::pair<int, int> x, std::pair<int, int> y) -> int;
    /// Vertex map from build_kg(6,2) to build_sp(4).
    auto phi_vertex_map() -> std::vector<VertexIndex>;
    /// The graph on the 15 pairs with edges where the pairing vanishes.
    auto phi_graph() -> Graph;

    struct OctahedronGraphs
    {
        Graph n;
        Graph c;
        std::vector<std::pair<int, int>> edges;
        /// Face containing vertex 1 for each antipodal face pair.
        std::vector<std::array<int, 3>> circles;
    };

    auto antipode(int vertex) -> int;
    auto build_octahedron_graphs() -> OctahedronGraphs;

    struct BoundsRow
    {
        int genus = 0;
        double g_log_g = 0;
        std::string g_log_g_text;
        Integer sp_bound;
        Integer upper;
    };

    auto bounds_table(int g) -> BoundsRow;
}
