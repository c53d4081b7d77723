#include <curvecolor/search.hpp>

#include <algorithm>
#include <deque>

namespace curvecolor
{
    namespace
    {
        class DsaturSearch
        {
        public:
            DsaturSearch(const Graph & g, SearchBudget budget) :
                _g(g),
                _counter(budget, "chromatic_number"),
                _colours(g.size(), -1),
                _neighbour_colour_count(g.size(), std::vector<int>(g.size() + 1, 0)),
                _saturation(g.size(), 0),
                _uncoloured_degree(g.size())
            {
                for (VertexIndex v = 0; v < g.size(); ++v)
                    _uncoloured_degree[v] = g.degree(v);
            }

            auto solve(std::size_t lower_bound) -> ChromaticResult
            {
                _lower_bound = lower_bound;
                _best = _g.size() + 1;
                search(0, 0);
                return {_best, Coloring{_best_colours}, _counter.nodes()};
            }

        private:
            const Graph & _g;
            NodeCounter _counter;
            std::vector<int> _colours;
            std::vector<std::vector<int>> _neighbour_colour_count;
            std::vector<std::size_t> _saturation;
            std::vector<std::size_t> _uncoloured_degree;
            std::size_t _lower_bound = 0;
            std::size_t _best = 0;
            std::vector<int> _best_colours;

            auto choose() const -> VertexIndex
            {
                VertexIndex chosen = _g.size();
                for (VertexIndex v = 0; v < _g.size(); ++v) {
                    if (_colours[v] != -1)
                        continue;
                    if (chosen == _g.size() || _saturation[v] > _saturation[chosen] ||
                        (_saturation[v] == _saturation[chosen] && _uncoloured_degree[v] > _uncoloured_degree[chosen]))
                        chosen = v;
                }
                return chosen;
            }

            void assign(VertexIndex v, int colour)
            {
                _colours[v] = colour;
                const auto & nbrs = _g.neighbours(v);
                for (auto u = nbrs.find_first(); u != Bitset::npos; u = nbrs.find_next(u)) {
                    --_uncoloured_degree[u];
                    if (_neighbour_colour_count[u][colour]++ == 0)
                        ++_saturation[u];
                }
            }

            void unassign(VertexIndex v)
            {
                int colour = _colours[v];
                _colours[v] = -1;
                const auto & nbrs = _g.neighbours(v);
                for (auto u = nbrs.find_first(); u != Bitset::npos; u = nbrs.find_next(u)) {
                    ++_uncoloured_degree[u];
                    if (--_neighbour_colour_count[u][colour] == 0)
                        --_saturation[u];
                }
            }

            void search(std::size_t coloured, std::size_t used)
            {
                _counter.tick();
                if (coloured == _g.size()) {
                    _best = used;
                    _best_colours = _colours;
                    return;
                }

                auto v = choose();
                for (std::size_t c = 0; c <= used && c + 1 < _best; ++c) {
                    if (_neighbour_colour_count[v][c] != 0)
                        continue;
                    assign(v, static_cast<int>(c));
                    search(coloured + 1, std::max(used, c + 1));
                    unassign(v);
                    if (_best <= _lower_bound)
                        return;
                }
            }
        };
    }

    auto chromatic_number(const Graph & g, SearchBudget budget) -> ChromaticResult
    {
        if (g.empty())
            return {};
        auto omega = clique_number(g, budget);
        DsaturSearch search(g, budget);
        auto result = search.solve(omega.clique_number);
        result.nodes += omega.nodes;
        return result;
    }

    auto to_string(PropagationObstruction::Kind kind) -> std::string
    {
        switch (kind) {
        case PropagationObstruction::Kind::impure: return "impure";
        case PropagationObstruction::Kind::disconnected: return "disconnected";
        case PropagationObstruction::Kind::contradiction: return "contradiction";
        }
        return "unknown";
    }

    namespace
    {
        auto describe(const Graph & g, const VertexSet & clique) -> std::string
        {
            std::string out = "{";
            for (std::size_t i = 0; i < clique.size(); ++i)
                out += (i ? "," : "") + g.label(clique[i]);
            return out + "}";
        }
    }

    auto propagate_unique_coloring(const Graph & g, std::size_t k, VertexSet seed, SearchBudget budget)
        -> PropagationResult
    {
        std::sort(seed.begin(), seed.end());
        if (seed.size() != k || ! g.is_clique(seed))
            throw std::invalid_argument("seed is not a clique of size " + std::to_string(k));
        {
            Bitset common(g.size());
            common.set();
            for (auto v : seed) {
                common &= g.neighbours(v);
                common.reset(v);
            }
            if (common.any())
                throw std::invalid_argument("seed clique is not maximal");
        }

        auto k_graph = max_clique_graph(g, budget);
        for (const auto & clique : k_graph.cliques)
            if (clique.size() != k)
                return PropagationObstruction{PropagationObstruction::Kind::impure,
                    "maximal clique " + describe(g, clique) + " has " + std::to_string(clique.size()) +
                        " vertices, expected " + std::to_string(k),
                    {clique}};

        auto seed_at = std::find(k_graph.cliques.begin(), k_graph.cliques.end(), seed);
        auto start = static_cast<std::size_t>(seed_at - k_graph.cliques.begin());

        std::vector<int> colours(g.size(), -1);
        for (std::size_t i = 0; i < seed.size(); ++i)
            colours[seed[i]] = static_cast<int>(i);

        std::vector<bool> visited(k_graph.cliques.size(), false);
        std::deque<std::size_t> queue{start};
        visited[start] = true;
        NodeCounter counter(budget, "propagate_unique_coloring");

        while (! queue.empty()) {
            auto a = queue.front();
            queue.pop_front();
            const auto & from = k_graph.cliques[a];
            for (auto b : k_graph.adjacency[a]) {
                counter.tick();
                const auto & to = k_graph.cliques[b];
                VertexIndex leaving = 0, entering = 0;
                for (auto v : from)
                    if (! std::binary_search(to.begin(), to.end(), v))
                        leaving = v;
                for (auto v : to)
                    if (! std::binary_search(from.begin(), from.end(), v))
                        entering = v;

                if (colours[entering] == -1)
                    colours[entering] = colours[leaving];
                else if (colours[entering] != colours[leaving])
                    return PropagationObstruction{PropagationObstruction::Kind::contradiction,
                        "moving from " + describe(g, from) + " to " + describe(g, to) + " forces " +
                            g.label(entering) + " to take colour " + std::to_string(colours[leaving]) +
                            " but it already has colour " + std::to_string(colours[entering]),
                        {from, to}};

                if (! visited[b]) {
                    visited[b] = true;
                    queue.push_back(b);
                }
            }
        }

        for (std::size_t c = 0; c < visited.size(); ++c)
            if (! visited[c])
                return PropagationObstruction{PropagationObstruction::Kind::disconnected,
                    "maximal clique " + describe(g, k_graph.cliques[c]) + " is not reachable from the seed",
                    {k_graph.cliques[c]}};

        // Every vertex lies in some maximal clique, so after a full sweep all
        // are coloured; isolated vertices were rejected as impure unless k = 1.
        Coloring result{std::move(colours)};
        if (! is_proper(g, result))
            throw std::logic_error("propagation produced an improper colouring");
        return result;
    }
}
