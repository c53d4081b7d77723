#pragma once

#include <curvecolor/graph.hpp>
#include <curvecolor/rational.hpp>

#include <json.hpp>

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace curvecolor::fractional
{
    /// Independent sets with positive weights covering every vertex at least once.
    struct FractionalColoring
    {
        std::vector<std::pair<VertexSet, Rational>> sets;
    };

    /// Nonnegative vertex weights summing to at most 1 on every independent set.
    struct FractionalClique
    {
        std::vector<Rational> weights;
    };

    /// A certificate that fails verification. `witness` is the offending
    /// vertex set (a single vertex for an under-covered vertex).
    class CertificateError : public std::runtime_error
    {
    public:
        CertificateError(const std::string & what, VertexSet witness) :
            std::runtime_error(what), witness(std::move(witness))
        {
        }

        VertexSet witness;
    };

    /// Checks independence of every set and coverage of every vertex, returns
    /// the total weight.
    auto verify_fractional_coloring(const Graph & g, const FractionalColoring & fc) -> Rational;

    /// Checks every maximal independent set has weight at most 1 (enough, as
    /// weights are nonnegative), returns the total weight.
    auto verify_fractional_clique(const Graph & g, const FractionalClique & w, SearchBudget budget = {}) -> Rational;

    /// For every k < n/2 and i in {1..n}: partitions whose small part has k
    /// elements and contains i, weight 1/k. Even n adds the middle layer at weight 1.
    /// Vertex indices refer to kneser::build_total_kg(n).
    auto kg_total_fractional_coloring(int n) -> FractionalColoring;

    /// w(A) = 1/|A| on kneser::build_total_cg(n).
    auto cg_total_fractional_clique(int n) -> FractionalClique;

    /// The sets S_i of k-subsets containing i, weight 1/k, on kneser::build_kg(n, k).
    auto kg_fractional_coloring(int n, int k) -> FractionalColoring;

    /// Constant 1/k on kneser::build_cg(n, k).
    auto cg_fractional_clique(int n, int k) -> FractionalClique;

    /// Class sizes and maximal-independent-set profiles for the arc graph of
    /// the four-holed sphere, with the weights to test against them.
    struct ProfileCheck
    {
        std::array<Rational, 3> weights;
        std::array<int, 3> class_sizes;
        std::vector<std::array<int, 3>> profiles;
    };

    auto four_holed_sphere_profiles() -> ProfileCheck;

    /// Each profile's weight, in profile order.
    auto profile_loads(const ProfileCheck & check) -> std::vector<Rational>;

    /// Verifies every profile load is at most 1 and returns the total value
    /// sum_i weight_i * class_size_i. Throws CertificateError otherwise.
    auto sigma4_fractional_check(const ProfileCheck & check = four_holed_sphere_profiles()) -> Rational;

    /// {"sets":[{"vertices":[labels...],"weight":"p/q"}]}
    auto coloring_to_json(const Graph & g, const FractionalColoring & fc) -> nlohmann::json;
    auto coloring_from_json(const Graph & g, const nlohmann::json & j) -> FractionalColoring;

    /// {"weights":{"<label>":"p/q"}}; unlisted vertices get weight 0.
    auto clique_to_json(const Graph & g, const FractionalClique & w) -> nlohmann::json;
    auto clique_from_json(const Graph & g, const nlohmann::json & j) -> FractionalClique;
}
