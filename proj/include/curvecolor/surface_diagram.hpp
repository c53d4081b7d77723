#pragma once

#include <curvecolor/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvecolor::surface
{
    /// Malformed or inconsistent diagram input.
    class DiagramError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// The curves do not bound a common domain.
    class NotHomologous : public DiagramError
    {
    public:
        using DiagramError::DiagramError;
    };

    /// The region boundary map has a kernel larger than the fundamental class.
    class DisconnectedDiagram : public DiagramError
    {
    public:
        using DiagramError::DiagramError;
    };

    /// An edge of c u d, oriented along its curve.
    struct Edge
    {
        std::string name;
        char curve = 'c';
    };

    /// A complementary region: Euler characteristic of its interior, corner
    /// count, and oriented boundary as (edge index, coefficient). A region
    /// lying to the left of an edge carries coefficient +1 on it, to the
    /// right -1; a region on both sides cancels.
    struct Region
    {
        std::string name;
        int euler_char = 1;
        int corners = 0;
        std::vector<std::pair<std::size_t, int>> boundary;
    };

    struct CurveDiagram
    {
        int genus = 0;
        std::size_t crossings = 0;
        std::vector<Edge> edges;
        std::vector<Region> regions;
        /// Coefficient of each edge in the 1-chains c and d.
        std::vector<int> chain_c;
        std::vector<int> chain_d;
    };

    /// Checks corner count, Euler-measure conservation, closedness of the
    /// region boundaries and edge count. Throws DiagramError.
    void validate(const CurveDiagram & diagram);

    /// m(R) = e(R) - c(R)/4.
    auto region_measure(const Region & r) -> Rational;

    struct Crossing
    {
        std::string id;
        /// +1 when (tangent of c, tangent of d) is a positive frame.
        int sign = 1;
    };

    /// Builds the cell decomposition cut out by two transverse curves from
    /// their crossing sequences. The cyclic order at each crossing is
    /// c-out, d-out, c-in, d-in for sign +1 and c-out, d-in, c-in, d-out for
    /// sign -1; faces are traced keeping the face on the left. Throws
    /// DiagramError on inconsistent sequences or when V - E + F != 2 - 2g,
    /// i.e. when some region of the claimed surface is not a disk.
    auto trace_faces(int genus, const std::vector<Crossing> & crossings, const std::vector<std::string> & curve_c,
        const std::vector<std::string> & curve_d) -> CurveDiagram;

    /// Integer coefficients over the regions, modulo the fundamental class.
    struct Domain
    {
        std::vector<long long> coefficients;
    };

    /// Solves boundary(D) = d - c exactly over the integers with the first
    /// region's coefficient fixed at 0.
    auto solve_domain(const CurveDiagram & diagram) -> Domain;

    auto boundary_of(const CurveDiagram & diagram, const Domain & domain) -> std::vector<long long>;

    auto euler_measure(const CurveDiagram & diagram, const Domain & domain) -> Rational;

    /// Sign turning the Euler measure of a domain bounded by d - c into twice
    /// the colour: a genus-h region with boundary d - c has measure -2h.
    inline constexpr int measure_sign = -1;

    struct HomologousColor
    {
        Domain domain;
        Rational measure;
        /// measure_sign * m(D) reduced into [0, 2(g-1)).
        long long f_prime = 0;
        /// f_prime / 2, in [0, g-1).
        long long f = 0;
    };

    /// Colour of d relative to c. Needs genus >= 2; throws DiagramError when
    /// the measure is not an even integer.
    auto homologous_color(const CurveDiagram & diagram) -> HomologousColor;

    /// Colour shift of a Torelli element read off the diagram of (d, phi(d)).
    auto color_shift(const CurveDiagram & diagram) -> long long;

    /// genus_sigma1 * intersection mod (g-1), in [0, g-1).
    auto chillingworth_expected_shift(int genus_sigma1, long long intersection, int g) -> long long;

    /// Least nonnegative residue.
    auto residue(long long value, long long modulus) -> long long;

    // Fixture families.

    /// Disjoint homologous c, d cobounding a genus-h region on S_g, 0 <= h <= g-1.
    auto cobounding_diagram(int g, int h) -> CurveDiagram;

    /// c and d the same curve, with the single region S - c.
    auto identical_curves_diagram(int g) -> CurveDiagram;

    /// c non-separating, d a small separating curve bounding a disk; not homologous.
    auto non_homologous_diagram(int g) -> CurveDiagram;

    /// The diagram of (delta, phi(delta)) for the bounding pair map phi of a
    /// pair alpha, beta cobounding a genus-h piece, 1 <= h <= g-2, with
    /// algebraic intersection iota in {-1, 0, 1} between delta and alpha.
    auto bounding_pair_diagram(int g, int h, int iota) -> CurveDiagram;

    /// Diagrams (c_0, c_i), i = 0..g-2, for g-1 disjoint homologous curves
    /// cutting S_g into a cyclic chain of genus-one pieces.
    auto clique_family(int g) -> std::vector<CurveDiagram>;

    /// Tracing input {"genus","crossings":[{"id","sign"}],"curve_c","curve_d"}
    /// or explicit regions {"genus","regions":[{"e","corners","edges":[{"edge","coeff"}]}],
    /// "boundary_c","boundary_d"}.
    auto diagram_from_json(const nlohmann::json & j) -> CurveDiagram;

    /// Explicit-region form.
    auto diagram_to_json(const CurveDiagram & diagram) -> nlohmann::json;
}
