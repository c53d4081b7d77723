#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curvecolor
{
    using VertexIndex = std::size_t;
    using VertexSet = std::vector<VertexIndex>;
    using Bitset = boost::dynamic_bitset<>;

    /// Raised by every exhaustive search that runs past its node limit.
    class BudgetExhausted : public std::runtime_error
    {
    public:
        explicit BudgetExhausted(const std::string & what_search);
    };

    /// Upper bound on branch nodes for a single search. Searches fail loudly
    /// instead of truncating.
    struct SearchBudget
    {
        std::uint64_t node_limit = 100'000'000;
    };

    class NodeCounter
    {
    public:
        NodeCounter(SearchBudget budget, std::string what) :
            _limit(budget.node_limit), _what(std::move(what))
        {
        }

        void tick()
        {
            if (++_nodes > _limit)
                throw BudgetExhausted(_what);
        }

        [[nodiscard]] auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        std::uint64_t _limit;
        std::uint64_t _nodes = 0;
        std::string _what;
    };

    /// Finite simple graph with unique printable labels. Immutable once built;
    /// adjacency is stored as one bitset row per vertex.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws std::invalid_argument on duplicate labels, self-loops or
        /// out-of-range endpoints. Duplicate edges are merged.
        Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexIndex, VertexIndex>> & edges);

        /// Builds the graph whose edges are the unordered pairs i < j with adjacent(i, j).
        static auto from_predicate(std::vector<std::string> labels,
            const std::function<bool(VertexIndex, VertexIndex)> & adjacent) -> Graph;

        static auto complete(std::size_t n) -> Graph;
        static auto edgeless(std::size_t n) -> Graph;
        static auto path(std::size_t n) -> Graph;

        [[nodiscard]] auto size() const -> std::size_t { return _labels.size(); }
        [[nodiscard]] auto empty() const -> bool { return _labels.empty(); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edge_count; }

        [[nodiscard]] auto adjacent(VertexIndex u, VertexIndex v) const -> bool { return _rows[u].test(v); }
        [[nodiscard]] auto neighbours(VertexIndex v) const -> const Bitset & { return _rows[v]; }
        [[nodiscard]] auto degree(VertexIndex v) const -> std::size_t { return _rows[v].count(); }

        [[nodiscard]] auto label(VertexIndex v) const -> const std::string & { return _labels[v]; }
        [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
        [[nodiscard]] auto index_of(const std::string & label) const -> std::optional<VertexIndex>;

        /// Edges as pairs (u, v) with u < v, in row-major order.
        [[nodiscard]] auto edges() const -> std::vector<std::pair<VertexIndex, VertexIndex>>;

        [[nodiscard]] auto induced_subgraph(const VertexSet & vertices) const -> Graph;
        [[nodiscard]] auto complement() const -> Graph;

        [[nodiscard]] auto is_clique(const VertexSet & vertices) const -> bool;
        [[nodiscard]] auto is_independent(const VertexSet & vertices) const -> bool;

    private:
        std::vector<std::string> _labels;
        std::vector<Bitset> _rows;
        std::unordered_map<std::string, VertexIndex> _index;
        std::size_t _edge_count = 0;

        explicit Graph(std::vector<std::string> labels);
        void add_edge(VertexIndex u, VertexIndex v);
    };

    /// Total assignment vertex -> colour id. Properness is checked separately.
    struct Coloring
    {
        std::vector<int> colors;

        /// Number of distinct colour ids in use.
        [[nodiscard]] auto palette_size() const -> std::size_t;
    };

    /// True iff no edge is monochromatic. Throws std::invalid_argument if the
    /// colouring does not cover every vertex.
    auto is_proper(const Graph & g, const Coloring & c) -> bool;

    /// Relabels colour ids in order of first appearance by vertex index, so two
    /// colourings inducing the same partition compare equal.
    auto canonical_partition(const Coloring & c) -> std::vector<int>;

    auto to_bitset(const VertexSet & vertices, std::size_t n) -> Bitset;
    auto to_vertex_set(const Bitset & bits) -> VertexSet;
}
