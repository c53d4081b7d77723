#include <curvecolor/search.hpp>

#include <algorithm>

namespace curvecolor
{
    namespace
    {
        // Vertex order for backtracking: repeatedly take the vertex with the
        // most already-ordered neighbours, then highest degree, then lowest index.
        auto connectivity_order(const Graph & g) -> std::vector<VertexIndex>
        {
            std::vector<VertexIndex> order;
            std::vector<std::size_t> placed_neighbours(g.size(), 0);
            std::vector<bool> placed(g.size(), false);
            for (std::size_t step = 0; step < g.size(); ++step) {
                VertexIndex best = g.size();
                for (VertexIndex v = 0; v < g.size(); ++v) {
                    if (placed[v])
                        continue;
                    if (best == g.size() || placed_neighbours[v] > placed_neighbours[best] ||
                        (placed_neighbours[v] == placed_neighbours[best] && g.degree(v) > g.degree(best)))
                        best = v;
                }
                placed[best] = true;
                order.push_back(best);
                const auto & nbrs = g.neighbours(best);
                for (auto u = nbrs.find_first(); u != Bitset::npos; u = nbrs.find_next(u))
                    ++placed_neighbours[u];
            }
            return order;
        }

        struct IsomorphismSearch
        {
            const Graph & g1;
            const Graph & g2;
            NodeCounter counter;
            std::vector<VertexIndex> order;
            std::vector<VertexIndex> mapping;
            std::vector<bool> used;

            auto extend(std::size_t depth) -> bool
            {
                counter.tick();
                if (depth == order.size())
                    return true;
                auto v = order[depth];
                for (VertexIndex w = 0; w < g2.size(); ++w) {
                    if (used[w] || g1.degree(v) != g2.degree(w))
                        continue;
                    bool consistent = true;
                    for (std::size_t i = 0; i < depth && consistent; ++i) {
                        auto u = order[i];
                        consistent = g1.adjacent(u, v) == g2.adjacent(mapping[u], w);
                    }
                    if (! consistent)
                        continue;
                    mapping[v] = w;
                    used[w] = true;
                    if (extend(depth + 1))
                        return true;
                    used[w] = false;
                }
                return false;
            }
        };

        struct EndomorphismSearch
        {
            const Graph & g;
            NodeCounter counter;
            bool stop_at_first_fold;
            std::vector<VertexIndex> order;
            std::vector<VertexIndex> image;
            std::vector<bool> assigned;
            EndomorphismCount result;

            auto extend(std::size_t depth) -> bool
            {
                counter.tick();
                if (depth == order.size()) {
                    ++result.endomorphisms;
                    std::vector<bool> hit(g.size(), false);
                    bool bijective = true;
                    for (auto w : image) {
                        if (hit[w])
                            bijective = false;
                        hit[w] = true;
                    }
                    if (bijective)
                        ++result.automorphisms;
                    else if (! result.non_automorphism) {
                        result.non_automorphism = image;
                        if (stop_at_first_fold)
                            return false;
                    }
                    return true;
                }

                auto v = order[depth];
                Bitset candidates(g.size());
                candidates.set();
                const auto & nbrs = g.neighbours(v);
                for (auto u = nbrs.find_first(); u != Bitset::npos; u = nbrs.find_next(u))
                    if (assigned[u])
                        candidates &= g.neighbours(image[u]);

                assigned[v] = true;
                for (auto w = candidates.find_first(); w != Bitset::npos; w = candidates.find_next(w)) {
                    image[v] = w;
                    if (! extend(depth + 1))
                        return false;
                }
                assigned[v] = false;
                return true;
            }
        };
    }

    auto is_isomorphism(const Graph & g1, const Graph & g2, const std::vector<VertexIndex> & mapping) -> bool
    {
        if (g1.size() != g2.size() || mapping.size() != g1.size())
            return false;
        std::vector<bool> hit(g2.size(), false);
        for (auto w : mapping) {
            if (w >= g2.size() || hit[w])
                return false;
            hit[w] = true;
        }
        for (VertexIndex u = 0; u < g1.size(); ++u)
            for (VertexIndex v = u + 1; v < g1.size(); ++v)
                if (g1.adjacent(u, v) != g2.adjacent(mapping[u], mapping[v]))
                    return false;
        return true;
    }

    auto find_isomorphism(const Graph & g1, const Graph & g2, SearchBudget budget)
        -> std::optional<std::vector<VertexIndex>>
    {
        if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
            return std::nullopt;

        std::vector<std::size_t> d1, d2;
        for (VertexIndex v = 0; v < g1.size(); ++v) {
            d1.push_back(g1.degree(v));
            d2.push_back(g2.degree(v));
        }
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2)
            return std::nullopt;

        IsomorphismSearch search{g1, g2, NodeCounter(budget, "find_isomorphism"), connectivity_order(g1),
            std::vector<VertexIndex>(g1.size()), std::vector<bool>(g2.size(), false)};
        if (! search.extend(0))
            return std::nullopt;
        if (! is_isomorphism(g1, g2, search.mapping))
            throw std::logic_error("isomorphism search returned an invalid mapping");
        return search.mapping;
    }

    auto count_endomorphisms(const Graph & g, SearchBudget budget, bool stop_at_first_fold) -> EndomorphismCount
    {
        EndomorphismSearch search{g, NodeCounter(budget, "count_endomorphisms"), stop_at_first_fold,
            connectivity_order(g), std::vector<VertexIndex>(g.size()), std::vector<bool>(g.size(), false), {}};
        search.extend(0);
        return search.result;
    }

    auto is_core(const Graph & g, SearchBudget budget) -> bool
    {
        return ! count_endomorphisms(g, budget, true).non_automorphism.has_value();
    }
}
