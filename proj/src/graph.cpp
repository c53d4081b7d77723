#include <curvecolor/graph.hpp>

#include <algorithm>
#include <set>

namespace curvecolor
{
    BudgetExhausted::BudgetExhausted(const std::string & what_search) :
        std::runtime_error("budget exhausted: " + what_search)
    {
    }

    Graph::Graph(std::vector<std::string> labels) :
        _labels(std::move(labels)),
        _rows(_labels.size(), Bitset(_labels.size()))
    {
        _index.reserve(_labels.size());
        for (VertexIndex v = 0; v < _labels.size(); ++v)
            if (! _index.emplace(_labels[v], v).second)
                throw std::invalid_argument("duplicate vertex label '" + _labels[v] + "'");
    }

    Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexIndex, VertexIndex>> & edges) :
        Graph(std::move(labels))
    {
        for (auto [u, v] : edges) {
            if (u >= size() || v >= size())
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop at '" + _labels[u] + "'");
            add_edge(u, v);
        }
    }

    void Graph::add_edge(VertexIndex u, VertexIndex v)
    {
        if (_rows[u].test(v))
            return;
        _rows[u].set(v);
        _rows[v].set(u);
        ++_edge_count;
    }

    auto Graph::from_predicate(std::vector<std::string> labels,
        const std::function<bool(VertexIndex, VertexIndex)> & adjacent) -> Graph
    {
        Graph g(std::move(labels));
        for (VertexIndex u = 0; u < g.size(); ++u)
            for (VertexIndex v = u + 1; v < g.size(); ++v)
                if (adjacent(u, v))
                    g.add_edge(u, v);
        return g;
    }

    namespace
    {
        auto numbered_labels(std::size_t n) -> std::vector<std::string>
        {
            std::vector<std::string> labels;
            labels.reserve(n);
            for (std::size_t i = 1; i <= n; ++i)
                labels.push_back(std::to_string(i));
            return labels;
        }
    }

    auto Graph::complete(std::size_t n) -> Graph
    {
        return from_predicate(numbered_labels(n), [](VertexIndex, VertexIndex) { return true; });
    }

    auto Graph::edgeless(std::size_t n) -> Graph
    {
        return from_predicate(numbered_labels(n), [](VertexIndex, VertexIndex) { return false; });
    }

    auto Graph::path(std::size_t n) -> Graph
    {
        return from_predicate(numbered_labels(n), [](VertexIndex u, VertexIndex v) { return v == u + 1; });
    }

    auto Graph::index_of(const std::string & label) const -> std::optional<VertexIndex>
    {
        auto it = _index.find(label);
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto Graph::edges() const -> std::vector<std::pair<VertexIndex, VertexIndex>>
    {
        std::vector<std::pair<VertexIndex, VertexIndex>> result;
        result.reserve(_edge_count);
        for (VertexIndex u = 0; u < size(); ++u)
            for (auto v = _rows[u].find_next(u); v != Bitset::npos; v = _rows[u].find_next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::induced_subgraph(const VertexSet & vertices) const -> Graph
    {
        std::vector<std::string> labels;
        labels.reserve(vertices.size());
        for (auto v : vertices)
            labels.push_back(_labels.at(v));
        return from_predicate(std::move(labels),
            [&](VertexIndex i, VertexIndex j) { return adjacent(vertices[i], vertices[j]); });
    }

    auto Graph::complement() const -> Graph
    {
        return from_predicate(_labels, [&](VertexIndex u, VertexIndex v) { return ! adjacent(u, v); });
    }

    auto Graph::is_clique(const VertexSet & vertices) const -> bool
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j] || ! adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    auto Graph::is_independent(const VertexSet & vertices) const -> bool
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    auto Coloring::palette_size() const -> std::size_t
    {
        return std::set<int>(colors.begin(), colors.end()).size();
    }

    auto is_proper(const Graph & g, const Coloring & c) -> bool
    {
        if (c.colors.size() != g.size())
            throw std::invalid_argument("colouring is not total: " + std::to_string(c.colors.size()) +
                " colours for " + std::to_string(g.size()) + " vertices");
        for (VertexIndex u = 0; u < g.size(); ++u)
            for (auto v = g.neighbours(u).find_next(u); v != Bitset::npos; v = g.neighbours(u).find_next(v))
                if (c.colors[u] == c.colors[v])
                    return false;
        return true;
    }

    auto canonical_partition(const Coloring & c) -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(c.colors.size());
        std::vector<std::pair<int, int>> seen;
        for (int colour : c.colors) {
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto & p) { return p.first == colour; });
            if (it == seen.end()) {
                seen.emplace_back(colour, static_cast<int>(seen.size()));
                result.push_back(seen.back().second);
            }
            else
                result.push_back(it->second);
        }
        return result;
    }

    auto to_bitset(const VertexSet & vertices, std::size_t n) -> Bitset
    {
        Bitset bits(n);
        for (auto v : vertices)
            bits.set(v);
        return bits;
    }

    auto to_vertex_set(const Bitset & bits) -> VertexSet
    {
        VertexSet result;
        result.reserve(bits.count());
        for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v))
            result.push_back(v);
        return result;
    }
}
