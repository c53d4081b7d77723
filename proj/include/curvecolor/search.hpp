#pragma once

#include <curvecolor/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace curvecolor
{
    struct ChromaticResult
    {
        std::size_t chromatic_number = 0;
        Coloring witness;
        std::uint64_t nodes = 0;
    };

    /// Exact chromatic number by DSATUR branch-and-bound, seeded with an exact
    /// clique lower bound. Ties in the branching order go to the lowest vertex
    /// index, so the witness is reproducible for a fixed graph.
    auto chromatic_number(const Graph & g, SearchBudget budget = {}) -> ChromaticResult;

    struct CliqueResult
    {
        std::size_t clique_number = 0;
        VertexSet witness;
        std::uint64_t nodes = 0;
    };

    auto clique_number(const Graph & g, SearchBudget budget = {}) -> CliqueResult;

    /// All maximal cliques (Bron-Kerbosch with Tomita pivoting), each sorted,
    /// listed in lexicographic order.
    auto maximal_cliques(const Graph & g, SearchBudget budget = {}) -> std::vector<VertexSet>;

    /// All maximal independent sets, i.e. maximal cliques of the complement.
    auto maximal_independent_sets(const Graph & g, SearchBudget budget = {}) -> std::vector<VertexSet>;

    /// A bijection g1 -> g2 preserving adjacency and non-adjacency, or nullopt
    /// when none exists. Any returned mapping has been checked pair by pair.
    auto find_isomorphism(const Graph & g1, const Graph & g2, SearchBudget budget = {})
        -> std::optional<std::vector<VertexIndex>>;

    auto is_isomorphism(const Graph & g1, const Graph & g2, const std::vector<VertexIndex> & mapping) -> bool;

    struct EndomorphismCount
    {
        std::uint64_t endomorphisms = 0;
        std::uint64_t automorphisms = 0;
        /// First endomorphism found that is not a bijection, if any.
        std::optional<std::vector<VertexIndex>> non_automorphism;
    };

    /// Enumerates every homomorphism g -> g. With stop_at_first_fold set, the
    /// search ends at the first non-bijective endomorphism.
    auto count_endomorphisms(const Graph & g, SearchBudget budget = {}, bool stop_at_first_fold = false)
        -> EndomorphismCount;

    /// True iff every endomorphism of g is an automorphism.
    auto is_core(const Graph & g, SearchBudget budget = {}) -> bool;

    /// Maximal cliques as vertices; two are adjacent when they share all but
    /// one vertex (|A n B| = |A| - 1 = |B| - 1).
    struct MaxCliqueGraph
    {
        std::vector<VertexSet> cliques;
        std::vector<std::vector<std::size_t>> adjacency;

        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto adjacent(std::size_t a, std::size_t b) const -> bool;
    };

    auto max_clique_graph(const Graph & g, SearchBudget budget = {}) -> MaxCliqueGraph;

    struct PropagationObstruction
    {
        enum class Kind
        {
            impure,
            disconnected,
            contradiction
        };

        Kind kind;
        std::string message;
        /// impure: the offending clique. disconnected: an unreached clique.
        /// contradiction: the clique being left, then the clique being entered.
        std::vector<VertexSet> cliques;
    };

    auto to_string(PropagationObstruction::Kind kind) -> std::string;

    using PropagationResult = std::variant<Coloring, PropagationObstruction>;

    /// Walks the maximal clique graph outward from the seed: the vertex
    /// entering a clique takes the colour of the vertex leaving it. Succeeds
    /// with the unique k-colouring extending the seed (seed vertex i, in
    /// increasing index order, gets colour i) when every maximal clique has k
    /// vertices, the clique graph is connected and no clash occurs.
    /// Throws std::invalid_argument if seed is not a maximal clique of size k.
    auto propagate_unique_coloring(const Graph & g, std::size_t k, VertexSet seed, SearchBudget budget = {})
        -> PropagationResult;
}
