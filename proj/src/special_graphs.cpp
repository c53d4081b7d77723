#include <curvecolor/kneser.hpp>
#include <curvecolor/special_graphs.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace curvecolor::special
{
    auto make_line(long long p, long long q) -> FareyLine
    {
        if (p == 0 && q == 0)
            throw std::invalid_argument("the zero vector spans no line");
        auto d = std::gcd(p, q);
        p /= d;
        q /= d;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
        return {p, q};
    }

    auto to_string(const FareyLine & line) -> std::string
    {
        return "(" + std::to_string(line.p) + ":" + std::to_string(line.q) + ")";
    }

    auto determinant(const FareyLine & x, const FareyLine & y) -> long long
    {
        return x.p * y.q - y.p * x.q;
    }

    auto build_farey(int bound, bool extended) -> FareyGraph
    {
        if (bound < 1)
            throw std::invalid_argument("Farey truncation bound must be at least 1");
        FareyGraph farey;
        farey.bound = bound;
        farey.extended = extended;
        farey.lines.push_back({1, 0});
        for (long long q = 1; q <= bound; ++q)
            for (long long p = -bound; p <= bound; ++p)
                if (std::gcd(p, q) == 1)
                    farey.lines.push_back({p, q});
        std::sort(farey.lines.begin(), farey.lines.end());

        std::vector<std::string> labels;
        for (const auto & l : farey.lines)
            labels.push_back(to_string(l));
        const auto & lines = farey.lines;
        farey.graph = Graph::from_predicate(labels, [&](VertexIndex u, VertexIndex v) {
            auto d = std::llabs(determinant(lines[u], lines[v]));
            return d == 1 || (extended && d == 2);
        });
        return farey;
    }

    namespace
    {
        auto mod(long long x, int m) -> int
        {
            auto r = x % m;
            return static_cast<int>(r < 0 ? r + m : r);
        }

        auto inverse_mod(int x, int m) -> int
        {
            for (int y = 1; y < m; ++y)
                if (x * y % m == 1)
                    return y;
            throw std::logic_error("not invertible");
        }

        // Point of P^1(F_m) from a nonzero vector mod m.
        auto projective_index(int p, int q, int m) -> int
        {
            if (q == 0) {
                if (p == 0)
                    throw std::logic_error("vector vanishes mod m");
                return 0;
            }
            return mod(static_cast<long long>(p) * inverse_mod(q, m), m) + 1;
        }

        void check_modulus(int m)
        {
            if (m != 2 && m != 3)
                throw std::invalid_argument("modulus must be 2 or 3");
        }
    }

    auto farey_mod_coloring(const FareyLine & line, int m) -> int
    {
        check_modulus(m);
        return projective_index(mod(line.p, m), mod(line.q, m), m);
    }

    auto farey_mod_coloring_of(const FareyGraph & farey, int m) -> Coloring
    {
        Coloring c;
        for (const auto & l : farey.lines)
            c.colors.push_back(farey_mod_coloring(l, m));
        return c;
    }

    auto projective_point_label(int color, int m) -> std::string
    {
        check_modulus(m);
        if (color < 0 || color > m)
            throw std::invalid_argument("no such point of the projective line");
        return color == 0 ? "(1:0)" : "(" + std::to_string(color - 1) + ":1)";
    }

    auto psl2_action(const Matrix2 & g, const FareyLine & line) -> FareyLine
    {
        if (g[0] * g[3] - g[1] * g[2] != 1)
            throw std::invalid_argument("matrix does not have determinant 1");
        return make_line(g[0] * line.p + g[1] * line.q, g[2] * line.p + g[3] * line.q);
    }

    auto psl2_color_action(const Matrix2 & g, int color, int m) -> int
    {
        check_modulus(m);
        if (mod(g[0] * g[3] - g[1] * g[2], m) != 1)
            throw std::invalid_argument("matrix does not have determinant 1 mod m");
        int p = color == 0 ? 1 : color - 1;
        int q = color == 0 ? 0 : 1;
        return projective_index(mod(g[0] * p + g[1] * q, m), mod(g[2] * p + g[3] * q, m), m);
    }

    auto check_det2_reconstruction(const FareyGraph & farey) -> std::size_t
    {
        std::size_t checked = 0;
        const auto & lines = farey.lines;
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                const auto & u = lines[i];
                const auto & v = lines[j];
                if (std::llabs(determinant(u, v)) != 2)
                    continue;
                if ((u.p + v.p) % 2 != 0 || (u.q + v.q) % 2 != 0)
                    throw std::logic_error(to_string(u) + " and " + to_string(v) + " differ mod 2");
                long long x1p = (u.p + v.p) / 2, x1q = (u.q + v.q) / 2;
                long long x2p = (u.p - v.p) / 2, x2q = (u.q - v.q) / 2;
                if (std::llabs(x1p * x2q - x2p * x1q) != 1)
                    throw std::logic_error(to_string(u) + " and " + to_string(v) + " do not split");
                ++checked;
            }
        return checked;
    }

    auto symplectic_form(std::uint32_t x, std::uint32_t y, int two_g) -> int
    {
        int total = 0;
        for (int i = 0; i + 1 < two_g; i += 2) {
            int x1 = (x >> i) & 1, x2 = (x >> (i + 1)) & 1;
            int y1 = (y >> i) & 1, y2 = (y >> (i + 1)) & 1;
            total += x1 * y2 + x2 * y1;
        }
        return total % 2;
    }

    auto build_sp(int two_g) -> Graph
    {
        if (two_g < 2 || two_g % 2 != 0 || two_g > 20)
            throw std::invalid_argument("Sp needs an even dimension between 2 and 20");
        std::uint32_t count = (1U << two_g) - 1;
        std::vector<std::string> labels;
        for (std::uint32_t x = 1; x <= count; ++x) {
            std::string bits;
            for (int t = 0; t < two_g; ++t)
                bits += ((x >> t) & 1) ? '1' : '0';
            labels.push_back(bits);
        }
        return Graph::from_predicate(labels, [&](VertexIndex u, VertexIndex v) {
            return symplectic_form(static_cast<std::uint32_t>(u + 1), static_cast<std::uint32_t>(v + 1), two_g) == 0;
        });
    }

    auto srg_parameters(const Graph & g) -> std::optional<SrgParameters>
    {
        SrgParameters s{g.size(), 0, 0, 0};
        if (g.empty())
            return std::nullopt;
        s.k = g.degree(0);
        std::optional<std::size_t> lambda, mu;
        for (VertexIndex u = 0; u < g.size(); ++u) {
            if (g.degree(u) != s.k)
                return std::nullopt;
            for (VertexIndex v = u + 1; v < g.size(); ++v) {
                auto common = (g.neighbours(u) & g.neighbours(v)).count();
                auto & slot = g.adjacent(u, v) ? lambda : mu;
                if (slot && *slot != common)
                    return std::nullopt;
                slot = common;
            }
        }
        s.lambda = lambda.value_or(0);
        s.mu = mu.value_or(0);
        return s;
    }

    auto pair_pairing(std::pair<int, int> x, std::pair<int, int> y) -> int
    {
        int shared = (x.first == y.first) + (x.first == y.second) + (x.second == y.first) + (x.second == y.second);
        return shared % 2;
    }

    auto phi_map(int i, int j) -> std::uint32_t
    {
        if (i == j || i < 1 || j < 1 || i > 6 || j > 6)
            throw std::invalid_argument("phi needs two distinct elements of 1..6");
        std::pair x{i, j};
        const std::array<std::pair<int, int>, 4> dual{{{2, 3}, {1, 2}, {5, 6}, {4, 5}}};
        std::uint32_t v = 0;
        for (int t = 0; t < 4; ++t)
            v |= static_cast<std::uint32_t>(pair_pairing(x, dual[t])) << t;
        return v;
    }

    auto phi_vertex_map() -> std::vector<VertexIndex>
    {
        auto kg = kneser::build_kg(6, 2);
        std::vector<VertexIndex> map;
        for (auto subset : kg.subsets) {
            auto e = kneser::subset_elements(subset);
            map.push_back(phi_map(e[0], e[1]) - 1);
        }
        return map;
    }

    auto phi_graph() -> Graph
    {
        auto kg = kneser::build_kg(6, 2);
        std::vector<std::pair<int, int>> pairs;
        for (auto subset : kg.subsets) {
            auto e = kneser::subset_elements(subset);
            pairs.emplace_back(e[0], e[1]);
        }
        return Graph::from_predicate(kg.graph.labels(),
            [&](VertexIndex u, VertexIndex v) { return pair_pairing(pairs[u], pairs[v]) == 0; });
    }

    auto antipode(int vertex) -> int
    {
        if (vertex < 1 || vertex > 6)
            throw std::invalid_argument("octahedron vertices are 1..6");
        return vertex > 3 ? vertex - 3 : vertex + 3;
    }

    auto build_octahedron_graphs() -> OctahedronGraphs
    {
        OctahedronGraphs o;
        std::vector<std::string> labels;
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b)
                if (antipode(a) != b) {
                    o.edges.emplace_back(a, b);
                    labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
                }
        auto disjoint = [&](VertexIndex u, VertexIndex v) {
            auto [a, b] = o.edges[u];
            auto [c, d] = o.edges[v];
            return a != c && a != d && b != c && b != d;
        };
        o.n = Graph::from_predicate(labels, disjoint);

        for (int b : {2, 5})
            for (int c : {3, 6})
                o.circles.push_back({1, b, c});
        auto in_pair = [&](const std::array<int, 3> & face, std::pair<int, int> e) {
            auto on = [&](int x) {
                return std::find(face.begin(), face.end(), x) != face.end();
            };
            auto off = [&](int x) {
                return std::find(face.begin(), face.end(), antipode(x)) != face.end();
            };
            return (on(e.first) && on(e.second)) || (off(e.first) && off(e.second));
        };
        auto all_labels = labels;
        for (const auto & f : o.circles)
            all_labels.push_back("circle" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]));
        auto edge_count = o.edges.size();
        o.c = Graph::from_predicate(all_labels, [&](VertexIndex u, VertexIndex v) {
            if (v < edge_count)
                return disjoint(u, v);
            if (u >= edge_count)
                return false;
            return in_pair(o.circles[v - edge_count], o.edges[u]);
        });
        return o;
    }

    auto bounds_table(int g) -> BoundsRow
    {
        if (g < 2)
            throw std::invalid_argument("bounds need genus at least 2");
        BoundsRow row;
        row.genus = g;
        row.g_log_g = g * std::log(static_cast<double>(g));
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.6f", row.g_log_g);
        row.g_log_g_text = buffer;
        Integer four_g = Integer(1) << (2 * g);
        row.sp_bound = Integer(g - 1) * (four_g - 1);
        row.upper = Integer(g) * four_g;
        return row;
    }
}
