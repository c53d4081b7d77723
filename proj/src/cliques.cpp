#include <curvecolor/search.hpp>

#include <algorithm>
#include <numeric>

namespace curvecolor
{
    namespace
    {
        struct MaxCliqueSearch
        {
            const Graph & g;
            NodeCounter counter;
            std::vector<VertexIndex> order;
            VertexSet current;
            VertexSet best;

            // Greedy sequential colouring of the candidates, in the fixed
            // degree order; colour classes bound the clique still reachable.
            void colour_bound(const Bitset & candidates, std::vector<VertexIndex> & verts, std::vector<std::size_t> & bounds)
            {
                Bitset uncoloured = candidates;
                std::size_t colour = 0;
                while (uncoloured.any()) {
                    ++colour;
                    Bitset available = uncoloured;
                    for (auto v : order) {
                        if (! available.test(v))
                            continue;
                        available -= g.neighbours(v);
                        available.reset(v);
                        uncoloured.reset(v);
                        verts.push_back(v);
                        bounds.push_back(colour);
                    }
                }
            }

            void expand(Bitset candidates)
            {
                counter.tick();
                std::vector<VertexIndex> verts;
                std::vector<std::size_t> bounds;
                colour_bound(candidates, verts, bounds);
                for (std::size_t i = verts.size(); i-- > 0;) {
                    if (current.size() + bounds[i] <= best.size())
                        return;
                    auto v = verts[i];
                    current.push_back(v);
                    Bitset next = candidates & g.neighbours(v);
                    if (next.none()) {
                        if (current.size() > best.size())
                            best = current;
                    }
                    else
                        expand(next);
                    current.pop_back();
                    candidates.reset(v);
                }
            }
        };

        struct BronKerbosch
        {
            const Graph & g;
            NodeCounter counter;
            VertexSet current;
            std::vector<VertexSet> found;

            void expand(Bitset candidates, Bitset excluded)
            {
                counter.tick();
                if (candidates.none()) {
                    if (excluded.none()) {
                        found.push_back(current);
                        std::sort(found.back().begin(), found.back().end());
                    }
                    return;
                }

                // Pivot maximising |candidates n N(pivot)|, lowest index on ties.
                Bitset pool = candidates | excluded;
                VertexIndex pivot = pool.find_first();
                std::size_t best_cover = (candidates & g.neighbours(pivot)).count();
                for (auto u = pool.find_next(pivot); u != Bitset::npos; u = pool.find_next(u)) {
                    auto cover = (candidates & g.neighbours(u)).count();
                    if (cover > best_cover) {
                        best_cover = cover;
                        pivot = u;
                    }
                }

                Bitset branch = candidates - g.neighbours(pivot);
                for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
                    current.push_back(v);
                    expand(candidates & g.neighbours(v), excluded & g.neighbours(v));
                    current.pop_back();
                    candidates.reset(v);
                    excluded.set(v);
                }
            }
        };
    }

    auto clique_number(const Graph & g, SearchBudget budget) -> CliqueResult
    {
        if (g.empty())
            return {};

        MaxCliqueSearch search{g, NodeCounter(budget, "clique_number"), {}, {}, {}};
        search.order.resize(g.size());
        std::iota(search.order.begin(), search.order.end(), VertexIndex{0});
        std::stable_sort(search.order.begin(), search.order.end(),
            [&](VertexIndex a, VertexIndex b) { return g.degree(a) > g.degree(b); });

        Bitset all(g.size());
        all.set();
        search.best = {search.order.front()};
        search.expand(all);

        std::sort(search.best.begin(), search.best.end());
        return {search.best.size(), search.best, search.counter.nodes()};
    }

    auto maximal_cliques(const Graph & g, SearchBudget budget) -> std::vector<VertexSet>
    {
        if (g.empty())
            return {};
        BronKerbosch search{g, NodeCounter(budget, "maximal_cliques"), {}, {}};
        Bitset all(g.size());
        all.set();
        search.expand(all, Bitset(g.size()));
        std::sort(search.found.begin(), search.found.end());
        return std::move(search.found);
    }

    auto maximal_independent_sets(const Graph & g, SearchBudget budget) -> std::vector<VertexSet>
    {
        return maximal_cliques(g.complement(), budget);
    }

    auto MaxCliqueGraph::edge_count() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & row : adjacency)
            total += row.size();
        return total / 2;
    }

    auto MaxCliqueGraph::adjacent(std::size_t a, std::size_t b) const -> bool
    {
        return std::find(adjacency[a].begin(), adjacency[a].end(), b) != adjacency[a].end();
    }

    auto max_clique_graph(const Graph & g, SearchBudget budget) -> MaxCliqueGraph
    {
        MaxCliqueGraph result;
        result.cliques = maximal_cliques(g, budget);
        result.adjacency.resize(result.cliques.size());

        std::vector<Bitset> as_bits;
        as_bits.reserve(result.cliques.size());
        for (const auto & c : result.cliques)
            as_bits.push_back(to_bitset(c, g.size()));

        NodeCounter counter(budget, "max_clique_graph");
        for (std::size_t a = 0; a < as_bits.size(); ++a)
            for (std::size_t b = a + 1; b < as_bits.size(); ++b) {
                counter.tick();
                auto size_a = result.cliques[a].size();
                if (size_a != result.cliques[b].size())
                    continue;
                if ((as_bits[a] & as_bits[b]).count() + 1 == size_a) {
                    result.adjacency[a].push_back(b);
                    result.adjacency[b].push_back(a);
                }
            }
        return result;
    }
}
