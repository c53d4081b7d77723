#include <curvecolor/fractional.hpp>
#include <curvecolor/io.hpp>
#include <curvecolor/kneser.hpp>
#include <curvecolor/search.hpp>

#include <bit>

namespace curvecolor::fractional
{
    namespace
    {
        auto describe(const Graph & g, const VertexSet & s) -> std::string
        {
            std::string out = "[";
            for (std::size_t i = 0; i < s.size(); ++i)
                out += (i ? ", " : "") + g.label(s[i]);
            return out + "]";
        }
    }

    auto verify_fractional_coloring(const Graph & g, const FractionalColoring & fc) -> Rational
    {
        std::vector<Rational> cover(g.size(), Rational(0));
        Rational total = 0;
        for (const auto & [set, weight] : fc.sets) {
            if (weight <= 0)
                throw CertificateError("set " + describe(g, set) + " has non-positive weight " + to_string(weight), set);
            for (auto v : set)
                if (v >= g.size())
                    throw CertificateError("set names vertex index " + std::to_string(v) + " outside the graph", set);
            if (! g.is_independent(set))
                throw CertificateError("set " + describe(g, set) + " is not independent", set);
            for (auto v : set)
                cover[v] += weight;
            total += weight;
        }
        for (VertexIndex v = 0; v < g.size(); ++v)
            if (cover[v] < 1)
                throw CertificateError(
                    "vertex " + g.label(v) + " is covered with weight " + to_string(cover[v]) + " < 1", {v});
        return total;
    }

    auto verify_fractional_clique(const Graph & g, const FractionalClique & w, SearchBudget budget) -> Rational
    {
        if (w.weights.size() != g.size())
            throw CertificateError("fractional clique must weight every vertex", {});
        Rational total = 0;
        for (VertexIndex v = 0; v < g.size(); ++v) {
            if (w.weights[v] < 0)
                throw CertificateError("vertex " + g.label(v) + " has negative weight", {v});
            total += w.weights[v];
        }
        for (const auto & set : maximal_independent_sets(g, budget)) {
            Rational load = 0;
            for (auto v : set)
                load += w.weights[v];
            if (load > 1)
                throw CertificateError(
                    "independent set " + describe(g, set) + " carries weight " + to_string(load) + " > 1", set);
        }
        return total;
    }

    auto kg_total_fractional_coloring(int n) -> FractionalColoring
    {
        auto total = kneser::build_total_kg(n);
        FractionalColoring fc;
        for (int k = 1; 2 * k < n; ++k)
            for (int i = 1; i <= n; ++i) {
                VertexSet set;
                for (VertexIndex v = 0; v < total.subsets.size(); ++v) {
                    auto s = total.subsets[v];
                    if (std::popcount(s) == k && (s >> (i - 1)) & 1u)
                        set.push_back(v);
                }
                fc.sets.emplace_back(std::move(set), Rational(1, k));
            }
        if (n % 2 == 0) {
            VertexSet middle;
            for (VertexIndex v = 0; v < total.subsets.size(); ++v)
                if (2 * std::popcount(total.subsets[v]) == n)
                    middle.push_back(v);
            fc.sets.emplace_back(std::move(middle), Rational(1));
        }
        return fc;
    }

    auto cg_total_fractional_clique(int n) -> FractionalClique
    {
        auto cg = kneser::build_total_cg(n);
        FractionalClique w;
        for (auto s : cg.subsets)
            w.weights.emplace_back(1, std::popcount(s));
        return w;
    }

    auto kg_fractional_coloring(int n, int k) -> FractionalColoring
    {
        auto kg = kneser::build_kg(n, k);
        FractionalColoring fc;
        for (int i = 1; i <= n; ++i) {
            VertexSet set;
            for (VertexIndex v = 0; v < kg.subsets.size(); ++v)
                if ((kg.subsets[v] >> (i - 1)) & 1u)
                    set.push_back(v);
            fc.sets.emplace_back(std::move(set), Rational(1, k));
        }
        return fc;
    }

    auto cg_fractional_clique(int n, int k) -> FractionalClique
    {
        auto cg = kneser::build_cg(n, k);
        return {std::vector<Rational>(cg.subsets.size(), Rational(1, k))};
    }

    auto four_holed_sphere_profiles() -> ProfileCheck
    {
        return {{Rational(7, 9), Rational(2, 9), Rational(1, 9)},
            {6, 6, 12},
            {{1, 1, 0}, {1, 0, 2}, {0, 1, 4}, {0, 2, 2}, {0, 3, 3}}};
    }

    auto profile_loads(const ProfileCheck & check) -> std::vector<Rational>
    {
        std::vector<Rational> loads;
        for (const auto & profile : check.profiles) {
            Rational load = 0;
            for (std::size_t i = 0; i < 3; ++i)
                load += check.weights[i] * profile[i];
            loads.push_back(load);
        }
        return loads;
    }

    auto sigma4_fractional_check(const ProfileCheck & check) -> Rational
    {
        auto loads = profile_loads(check);
        for (std::size_t p = 0; p < loads.size(); ++p)
            if (loads[p] > 1)
                throw CertificateError("profile " + std::to_string(p) + " carries weight " + to_string(loads[p]), {});
        Rational total = 0;
        for (std::size_t i = 0; i < 3; ++i)
            total += check.weights[i] * check.class_sizes[i];
        return total;
    }

    auto coloring_to_json(const Graph & g, const FractionalColoring & fc) -> nlohmann::json
    {
        auto sets = nlohmann::json::array();
        for (const auto & [set, weight] : fc.sets) {
            auto vertices = nlohmann::json::array();
            for (auto v : set)
                vertices.push_back(g.label(v));
            sets.push_back({{"vertices", vertices}, {"weight", to_string(weight)}});
        }
        return {{"sets", sets}};
    }

    namespace
    {
        auto vertex_named(const Graph & g, const std::string & label) -> VertexIndex
        {
            auto v = g.index_of(label);
            if (! v)
                throw FormatError("certificate names unknown vertex '" + label + "'");
            return *v;
        }

        auto weight_of(const nlohmann::json & value) -> Rational
        {
            if (value.is_string())
                return parse_rational(value.get<std::string>());
            if (value.is_number_integer())
                return Rational(value.get<long long>());
            throw FormatError("weights must be integers or \"p/q\" strings");
        }
    }

    auto coloring_from_json(const Graph & g, const nlohmann::json & j) -> FractionalColoring
    {
        if (! j.contains("sets") || ! j["sets"].is_array())
            throw FormatError("fractional colouring JSON needs a \"sets\" array");
        FractionalColoring fc;
        for (const auto & entry : j["sets"]) {
            VertexSet set;
            for (const auto & label : entry.at("vertices"))
                set.push_back(vertex_named(g, label.get<std::string>()));
            fc.sets.emplace_back(std::move(set), weight_of(entry.at("weight")));
        }
        return fc;
    }

    auto clique_to_json(const Graph & g, const FractionalClique & w) -> nlohmann::json
    {
        nlohmann::json weights = nlohmann::json::object();
        for (VertexIndex v = 0; v < g.size(); ++v)
            weights[g.label(v)] = to_string(w.weights.at(v));
        return {{"weights", weights}};
    }

    auto clique_from_json(const Graph & g, const nlohmann::json & j) -> FractionalClique
    {
        if (! j.contains("weights") || ! j["weights"].is_object())
            throw FormatError("fractional clique JSON needs a \"weights\" object");
        FractionalClique w{std::vector<Rational>(g.size(), Rational(0))};
        for (const auto & [label, value] : j["weights"].items())
            w.weights[vertex_named(g, label)] = weight_of(value);
        return w;
    }
}
