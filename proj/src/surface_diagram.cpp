#include <curvecolor/surface_diagram.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace curvecolor::surface
{
    auto residue(long long value, long long modulus) -> long long
    {
        if (modulus <= 0)
            throw std::invalid_argument("modulus must be positive");
        auto r = value % modulus;
        return r < 0 ? r + modulus : r;
    }

    auto region_measure(const Region & r) -> Rational
    {
        return Rational(r.euler_char) - Rational(r.corners, 4);
    }

    void validate(const CurveDiagram & diagram)
    {
        if (diagram.genus < 0)
            throw DiagramError("genus must be nonnegative");
        if (diagram.edges.empty())
            throw DiagramError("diagram has no edges");
        if (diagram.regions.empty())
            throw DiagramError("diagram has no regions");
        if (diagram.chain_c.size() != diagram.edges.size() || diagram.chain_d.size() != diagram.edges.size())
            throw DiagramError("curve chains must give a coefficient for every edge");
        if (diagram.crossings > 0 && diagram.edges.size() != 2 * diagram.crossings)
            throw DiagramError("a diagram with " + std::to_string(diagram.crossings) + " crossings needs " +
                std::to_string(2 * diagram.crossings) + " edges, found " + std::to_string(diagram.edges.size()));

        std::vector<long long> closure(diagram.edges.size(), 0);
        std::size_t corners = 0;
        Rational total_measure = 0;
        for (const auto & r : diagram.regions) {
            if (r.euler_char > 1)
                throw DiagramError("region " + r.name + " has Euler characteristic above 1");
            if (r.corners < 0)
                throw DiagramError("region " + r.name + " has a negative corner count");
            for (auto [edge, coeff] : r.boundary) {
                if (edge >= diagram.edges.size())
                    throw DiagramError("region " + r.name + " names a missing edge");
                closure[edge] += coeff;
            }
            corners += static_cast<std::size_t>(r.corners);
            total_measure += region_measure(r);
        }
        if (corners != 4 * diagram.crossings)
            throw DiagramError("regions carry " + std::to_string(corners) + " corners, expected 4 x " +
                std::to_string(diagram.crossings));
        for (std::size_t e = 0; e < closure.size(); ++e)
            if (closure[e] != 0)
                throw DiagramError("edge " + diagram.edges[e].name +
                    " does not appear once on each side: region coefficients sum to " + std::to_string(closure[e]));
        if (total_measure != 2 - 2 * diagram.genus)
            throw DiagramError("regions have total Euler measure " + to_string(total_measure) + ", expected " +
                std::to_string(2 - 2 * diagram.genus));
    }

    auto trace_faces(int genus, const std::vector<Crossing> & crossings, const std::vector<std::string> & curve_c,
        const std::vector<std::string> & curve_d) -> CurveDiagram
    {
        auto n = crossings.size();
        if (n == 0)
            throw DiagramError("tracing needs at least one crossing");

        std::map<std::string, std::size_t> index;
        for (std::size_t x = 0; x < n; ++x) {
            if (crossings[x].sign != 1 && crossings[x].sign != -1)
                throw DiagramError("crossing " + crossings[x].id + " has sign other than +1 or -1");
            if (! index.emplace(crossings[x].id, x).second)
                throw DiagramError("crossing id " + crossings[x].id + " repeated");
        }

        auto visits = [&](const std::vector<std::string> & curve, char name) {
            if (curve.size() != n)
                throw DiagramError(std::string("curve ") + name + " must visit each of the " + std::to_string(n) +
                    " crossings exactly once");
            std::vector<std::size_t> seq;
            std::vector<bool> seen(n, false);
            for (const auto & id : curve) {
                auto it = index.find(id);
                if (it == index.end())
                    throw DiagramError(std::string("curve ") + name + " visits unknown crossing " + id);
                if (seen[it->second])
                    throw DiagramError(std::string("curve ") + name + " visits crossing " + id + " twice");
                seen[it->second] = true;
                seq.push_back(it->second);
            }
            return seq;
        };
        auto seq_c = visits(curve_c, 'c');
        auto seq_d = visits(curve_d, 'd');

        CurveDiagram diagram;
        diagram.genus = genus;
        diagram.crossings = n;

        // Edge i of a curve runs from its i-th visit to the next one.
        struct Span
        {
            std::size_t from, to;
            int base_slot;
        };
        std::vector<Span> spans;
        for (auto [seq, curve] : {std::pair{&seq_c, 'c'}, std::pair{&seq_d, 'd'}})
            for (std::size_t i = 0; i < n; ++i) {
                diagram.edges.push_back({std::string(1, curve) + std::to_string(i), curve});
                spans.push_back({(*seq)[i], (*seq)[(i + 1) % n], curve == 'c' ? 0 : 2});
                (curve == 'c' ? diagram.chain_c : diagram.chain_d).push_back(1);
                (curve == 'c' ? diagram.chain_d : diagram.chain_c).push_back(0);
            }

        // Half-edge slots at a crossing: 0 c-out, 1 c-in, 2 d-out, 3 d-in.
        // A dart is (edge, reversed); it leaves from one slot.
        auto start_slot = [&](std::size_t edge, int reversed) {
            const auto & s = spans[edge];
            return reversed ? std::pair{s.to, s.base_slot + 1} : std::pair{s.from, s.base_slot};
        };
        std::map<std::pair<std::size_t, int>, std::pair<std::size_t, int>> dart_at;
        for (std::size_t e = 0; e < spans.size(); ++e)
            for (int reversed : {0, 1})
                dart_at[start_slot(e, reversed)] = {e, reversed};

        auto rotation = [&](std::size_t x) -> std::array<int, 4> {
            return crossings[x].sign > 0 ? std::array{0, 2, 1, 3} : std::array{0, 3, 1, 2};
        };

        std::map<std::pair<std::size_t, int>, bool> seen;
        for (std::size_t e = 0; e < spans.size(); ++e)
            for (int reversed : {0, 1}) {
                std::pair<std::size_t, int> dart{e, reversed};
                if (seen[dart])
                    continue;
                Region face;
                face.name = "R" + std::to_string(diagram.regions.size());
                std::map<std::size_t, int> boundary;
                while (! seen[dart]) {
                    seen[dart] = true;
                    ++face.corners;
                    boundary[dart.first] += dart.second ? -1 : 1;
                    // Turn at the far end: from the twin's slot, step clockwise.
                    auto [x, slot] = start_slot(dart.first, 1 - dart.second);
                    auto r = rotation(x);
                    auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), slot) - r.begin());
                    dart = dart_at.at({x, r[(pos + 3) % 4]});
                }
                for (auto [edge, coeff] : boundary)
                    if (coeff != 0)
                        face.boundary.emplace_back(edge, coeff);
                diagram.regions.push_back(std::move(face));
            }

        auto euler = static_cast<long long>(n) - static_cast<long long>(diagram.edges.size()) +
            static_cast<long long>(diagram.regions.size());
        if (euler != 2 - 2LL * genus)
            throw DiagramError("traced cell decomposition has V - E + F = " + std::to_string(euler) +
                ", but genus " + std::to_string(genus) + " needs " + std::to_string(2 - 2 * genus) +
                "; the complement is not a union of disks, use explicit-region input");
        validate(diagram);
        return diagram;
    }

    auto boundary_of(const CurveDiagram & diagram, const Domain & domain) -> std::vector<long long>
    {
        std::vector<long long> result(diagram.edges.size(), 0);
        for (std::size_t r = 0; r < diagram.regions.size(); ++r)
            for (auto [edge, coeff] : diagram.regions[r].boundary)
                result[edge] += domain.coefficients.at(r) * coeff;
        return result;
    }

    auto solve_domain(const CurveDiagram & diagram) -> Domain
    {
        validate(diagram);
        auto unknowns = diagram.regions.size() - 1;
        auto rows = diagram.edges.size();

        // Columns are regions 1..F-1; region 0 is the gauge base at 0.
        std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(unknowns + 1, 0));
        for (std::size_t r = 1; r < diagram.regions.size(); ++r)
            for (auto [edge, coeff] : diagram.regions[r].boundary)
                a[edge][r - 1] += coeff;
        for (std::size_t e = 0; e < rows; ++e)
            a[e][unknowns] = diagram.chain_d[e] - diagram.chain_c[e];

        // Row echelon form under unimodular integer row operations.
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_row(unknowns);
        for (std::size_t col = 0; col < unknowns; ++col) {
            while (true) {
                std::size_t best = rows;
                for (std::size_t i = rank; i < rows; ++i)
                    if (a[i][col] != 0 && (best == rows || abs(a[i][col]) < abs(a[best][col])))
                        best = i;
                if (best == rows)
                    throw DisconnectedDiagram("region boundaries are dependent beyond the fundamental class "
                                              "(region " + diagram.regions[col + 1].name + ")");
                std::swap(a[rank], a[best]);
                bool cleared = true;
                for (std::size_t i = rank + 1; i < rows; ++i) {
                    if (a[i][col] == 0)
                        continue;
                    Integer q = a[i][col] / a[rank][col];
                    for (std::size_t j = col; j <= unknowns; ++j)
                        a[i][j] -= q * a[rank][j];
                    if (a[i][col] != 0)
                        cleared = false;
                }
                if (cleared)
                    break;
            }
            pivot_row[col] = rank++;
        }
        for (std::size_t i = rank; i < rows; ++i)
            if (a[i][unknowns] != 0)
                throw NotHomologous("curves not homologous: d - c is not the boundary of any domain");

        std::vector<Integer> x(unknowns, 0);
        for (std::size_t col = unknowns; col-- > 0;) {
            const auto & row = a[pivot_row[col]];
            Integer rhs = row[unknowns];
            for (std::size_t j = col + 1; j < unknowns; ++j)
                rhs -= row[j] * x[j];
            if (rhs % row[col] != 0)
                throw NotHomologous("curves not homologous: the only rational domain is not integral");
            x[col] = rhs / row[col];
        }

        Domain domain{{0}};
        for (const auto & value : x)
            domain.coefficients.push_back(value.convert_to<long long>());

        auto check = boundary_of(diagram, domain);
        for (std::size_t e = 0; e < rows; ++e)
            if (check[e] != diagram.chain_d[e] - diagram.chain_c[e])
                throw std::logic_error("domain solve produced a wrong boundary");
        return domain;
    }

    auto euler_measure(const CurveDiagram & diagram, const Domain & domain) -> Rational
    {
        if (domain.coefficients.size() != diagram.regions.size())
            throw DiagramError("domain and diagram disagree on the number of regions");
        Rational total = 0;
        for (std::size_t r = 0; r < diagram.regions.size(); ++r)
            total += Rational(domain.coefficients[r]) * region_measure(diagram.regions[r]);
        return total;
    }

    auto homologous_color(const CurveDiagram & diagram) -> HomologousColor
    {
        if (diagram.genus < 2)
            throw DiagramError("colouring homologous curves needs genus at least 2");
        HomologousColor result;
        result.domain = solve_domain(diagram);
        result.measure = euler_measure(diagram, result.domain);
        if (boost::multiprecision::denominator(result.measure) != 1)
            throw DiagramError("Euler measure " + to_string(result.measure) + " of the domain is not an integer");

        auto period = 2LL * (diagram.genus - 1);
        auto measure = boost::multiprecision::numerator(result.measure).convert_to<long long>();
        result.f_prime = residue(measure_sign * measure, period);
        if (result.f_prime % 2 != 0)
            throw DiagramError("f' = " + std::to_string(result.f_prime) + " is odd; the diagram is malformed");
        result.f = result.f_prime / 2;
        return result;
    }

    auto color_shift(const CurveDiagram & diagram) -> long long
    {
        return homologous_color(diagram).f;
    }

    auto chillingworth_expected_shift(int genus_sigma1, long long intersection, int g) -> long long
    {
        if (g < 2)
            throw std::invalid_argument("expected shift needs genus at least 2");
        return residue(static_cast<long long>(genus_sigma1) * intersection, g - 1);
    }

    auto cobounding_diagram(int g, int h) -> CurveDiagram
    {
        if (g < 2 || h < 0 || h > g - 1)
            throw std::invalid_argument("cobounding diagram needs g >= 2 and 0 <= h <= g-1");
        CurveDiagram d;
        d.genus = g;
        d.edges = {{"c", 'c'}, {"d", 'd'}};
        d.chain_c = {1, 0};
        d.chain_d = {0, 1};
        d.regions = {
            {"inside", -2 * h, 0, {{0, -1}, {1, 1}}},
            {"outside", -2 * (g - 1 - h), 0, {{0, 1}, {1, -1}}},
        };
        validate(d);
        return d;
    }

    auto identical_curves_diagram(int g) -> CurveDiagram
    {
        CurveDiagram d;
        d.genus = g;
        d.edges = {{"c", 'c'}};
        d.chain_c = {1};
        d.chain_d = {1};
        d.regions = {{"complement", 2 - 2 * g, 0, {}}};
        validate(d);
        return d;
    }

    auto non_homologous_diagram(int g) -> CurveDiagram
    {
        CurveDiagram d;
        d.genus = g;
        d.edges = {{"c", 'c'}, {"d", 'd'}};
        d.chain_c = {1, 0};
        d.chain_d = {0, 1};
        d.regions = {
            {"disk", 1, 0, {{1, 1}}},
            {"rest", 1 - 2 * g, 0, {{1, -1}}},
        };
        validate(d);
        return d;
    }

    auto bounding_pair_diagram(int g, int h, int iota) -> CurveDiagram
    {
        if (g < 3 || h < 1 || h > g - 2)
            throw std::invalid_argument("bounding pair diagram needs g >= 3 and 1 <= h <= g-2");
        if (iota < -1 || iota > 1)
            throw std::invalid_argument("intersection must be -1, 0 or 1");
        if (iota == 0)
            return identical_curves_diagram(g);

        // delta crosses alpha and beta once; phi(delta) winds once round each
        // collar in opposite senses and meets delta there. Regions: the
        // genus-h side minus the strip along delta, the thin strip on the
        // other side, and everything else. Reversing delta flips every
        // boundary coefficient.
        int s = -iota;
        CurveDiagram d;
        d.genus = g;
        d.crossings = 2;
        d.edges = {{"delta1", 'c'}, {"delta2", 'c'}, {"phi_delta1", 'd'}, {"phi_delta2", 'd'}};
        d.chain_c = {1, 1, 0, 0};
        d.chain_d = {0, 0, 1, 1};
        d.regions = {
            {"far_side", -2 * (g - 1 - h), 4, {{0, -s}, {1, s}, {2, s}, {3, -s}}},
            {"sigma1_side", 1 - 2 * h, 2, {{0, s}, {2, -s}}},
            {"strip", 1, 2, {{1, -s}, {3, s}}},
        };
        validate(d);
        return d;
    }

    auto clique_family(int g) -> std::vector<CurveDiagram>
    {
        std::vector<CurveDiagram> family;
        for (int i = 0; i <= g - 2; ++i)
            family.push_back(cobounding_diagram(g, i));
        return family;
    }

    namespace
    {
        auto id_string(const nlohmann::json & value) -> std::string
        {
            if (value.is_string())
                return value.get<std::string>();
            if (value.is_number_integer())
                return std::to_string(value.get<long long>());
            throw DiagramError("identifiers must be strings or integers");
        }

        auto boundary_term(const nlohmann::json & value) -> std::pair<std::string, int>
        {
            if (value.is_object())
                return {id_string(value.at("edge")), value.value("coeff", 1)};
            return {id_string(value), 1};
        }
    }

    auto diagram_from_json(const nlohmann::json & j) -> CurveDiagram
    {
        try {
            int genus = j.at("genus").get<int>();
            if (! j.contains("regions")) {
                std::vector<Crossing> crossings;
                for (const auto & x : j.at("crossings"))
                    crossings.push_back({id_string(x.at("id")), x.at("sign").get<int>()});
                std::vector<std::string> c, d;
                for (const auto & v : j.at("curve_c"))
                    c.push_back(id_string(v));
                for (const auto & v : j.at("curve_d"))
                    d.push_back(id_string(v));
                return trace_faces(genus, crossings, c, d);
            }

            CurveDiagram diagram;
            diagram.genus = genus;
            if (j.contains("crossings"))
                diagram.crossings = j["crossings"].is_array() ? j["crossings"].size() : j["crossings"].get<std::size_t>();

            std::map<std::string, std::size_t> edge_index;
            auto edge = [&](const std::string & name, char curve) {
                auto [it, fresh] = edge_index.emplace(name, diagram.edges.size());
                if (fresh) {
                    diagram.edges.push_back({name, curve});
                    diagram.chain_c.push_back(0);
                    diagram.chain_d.push_back(0);
                }
                return it->second;
            };
            if (j.contains("edges"))
                for (const auto & e : j["edges"])
                    edge(id_string(e.at("name")), e.value("curve", std::string("c")).at(0));
            for (const auto & term : j.at("boundary_c")) {
                auto [name, coeff] = boundary_term(term);
                diagram.chain_c[edge(name, 'c')] += coeff;
            }
            for (const auto & term : j.at("boundary_d")) {
                auto [name, coeff] = boundary_term(term);
                diagram.chain_d[edge(name, 'd')] += coeff;
            }

            for (const auto & r : j.at("regions")) {
                Region region;
                region.name = r.value("name", "R" + std::to_string(diagram.regions.size()));
                region.euler_char = r.at("e").get<int>();
                region.corners = r.value("corners", 0);
                std::map<std::size_t, int> boundary;
                for (const auto & term : r.value("edges", nlohmann::json::array())) {
                    auto [name, coeff] = boundary_term(term);
                    auto it = edge_index.find(name);
                    if (it == edge_index.end())
                        throw DiagramError("region " + region.name + " names edge " + name +
                            " which lies on neither boundary_c nor boundary_d");
                    boundary[it->second] += coeff;
                }
                for (auto [e, coeff] : boundary)
                    if (coeff != 0)
                        region.boundary.emplace_back(e, coeff);
                diagram.regions.push_back(std::move(region));
            }
            validate(diagram);
            return diagram;
        }
        catch (const nlohmann::json::exception & e) {
            throw DiagramError(std::string("diagram JSON: ") + e.what());
        }
    }

    auto diagram_to_json(const CurveDiagram & diagram) -> nlohmann::json
    {
        auto edges = nlohmann::json::array();
        auto boundary_c = nlohmann::json::array();
        auto boundary_d = nlohmann::json::array();
        for (std::size_t e = 0; e < diagram.edges.size(); ++e) {
            const auto & name = diagram.edges[e].name;
            edges.push_back({{"name", name}, {"curve", std::string(1, diagram.edges[e].curve)}});
            if (diagram.chain_c[e] != 0)
                boundary_c.push_back({{"edge", name}, {"coeff", diagram.chain_c[e]}});
            if (diagram.chain_d[e] != 0)
                boundary_d.push_back({{"edge", name}, {"coeff", diagram.chain_d[e]}});
        }
        auto regions = nlohmann::json::array();
        for (const auto & r : diagram.regions) {
            auto terms = nlohmann::json::array();
            for (auto [e, coeff] : r.boundary)
                terms.push_back({{"edge", diagram.edges[e].name}, {"coeff", coeff}});
            regions.push_back({{"name", r.name}, {"e", r.euler_char}, {"corners", r.corners}, {"edges", terms}});
        }
        return {{"genus", diagram.genus}, {"crossings", diagram.crossings}, {"edges", edges},
            {"boundary_c", boundary_c}, {"boundary_d", boundary_d}, {"regions", regions}};
    }
}
