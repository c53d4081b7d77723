// curvecolor: build the graph families, run the exact solvers, check
// certificates and colour homologous curves from the command line.
#include <curvecolor/fractional.hpp>
#include <curvecolor/io.hpp>
#include <curvecolor/kneser.hpp>
#include <curvecolor/report.hpp>
#include <curvecolor/search.hpp>
#include <curvecolor/special_graphs.hpp>
#include <curvecolor/surface_diagram.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace curvecolor;

namespace
{
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Options
    {
        std::uint64_t budget = SearchBudget{}.node_limit;
        bool json = false;
        std::string out;
    };

    void emit(const Options & opts, const std::string & text)
    {
        if (opts.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(opts.out);
        if (! file)
            throw std::runtime_error("cannot write " + opts.out);
        file << text;
    }

    auto dump(const nlohmann::json & j) -> std::string
    {
        return j.dump(2) + "\n";
    }

    auto as_int(const std::vector<std::string> & params, std::size_t i, const std::string & what) -> int
    {
        if (i >= params.size())
            throw UsageError("missing parameter " + what);
        try {
            std::size_t used = 0;
            int value = std::stoi(params[i], &used);
            if (used != params[i].size())
                throw UsageError("parameter " + what + " is not an integer: " + params[i]);
            return value;
        }
        catch (const std::logic_error &) {
            throw UsageError("parameter " + what + " is not an integer: " + params[i]);
        }
    }

    void expect_params(const std::vector<std::string> & params, std::size_t count, const std::string & usage)
    {
        if (params.size() != count)
            throw UsageError("usage: " + usage);
    }

    auto build_family(const std::string & family, const std::vector<std::string> & params, bool extended) -> Graph
    {
        if (family == "kg" || family == "cg") {
            expect_params(params, 2, "build " + family + " N K");
            int n = as_int(params, 0, "N"), k = as_int(params, 1, "K");
            return family == "kg" ? kneser::build_kg(n, k).graph : kneser::build_cg(n, k).graph;
        }
        if (family == "kg-total" || family == "cg-total") {
            expect_params(params, 1, "build " + family + " N");
            int n = as_int(params, 0, "N");
            return family == "kg-total" ? kneser::build_total_kg(n).graph : kneser::build_total_cg(n).graph;
        }
        if (family == "sp") {
            expect_params(params, 1, "build sp TWO_G");
            return special::build_sp(as_int(params, 0, "TWO_G"));
        }
        if (family == "farey") {
            expect_params(params, 1, "build farey BOUND");
            return special::build_farey(as_int(params, 0, "BOUND"), extended).graph;
        }
        if (family == "octahedron-n" || family == "octahedron-c") {
            expect_params(params, 0, "build " + family);
            auto o = special::build_octahedron_graphs();
            return family == "octahedron-n" ? o.n : o.c;
        }
        throw UsageError("unknown family " + family +
            " (kg, cg, kg-total, cg-total, sp, farey, octahedron-n, octahedron-c)");
    }

    auto vertex_names(const Graph & g, const VertexSet & s) -> nlohmann::json
    {
        auto names = nlohmann::json::array();
        for (auto v : s)
            names.push_back(g.label(v));
        return names;
    }

    auto farey_coloring_json(const special::FareyGraph & f, int m) -> nlohmann::json
    {
        auto coloring = special::farey_mod_coloring_of(f, m);
        auto j = coloring_to_json(f.graph, coloring);
        j["proper"] = is_proper(f.graph, coloring);
        auto points = nlohmann::json::array();
        for (int c = 0; c <= m; ++c)
            points.push_back(special::projective_point_label(c, m));
        j["points"] = points;
        return j;
    }

    auto color_lines(const Graph & g, const Coloring & c) -> std::string
    {
        std::string out;
        for (VertexIndex v = 0; v < g.size(); ++v)
            out += "c color " + g.label(v) + " " + std::to_string(c.colors[v]) + "\n";
        return out;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Graphs of curves, Kneser families and their colourings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--budget", opts.budget, "search node limit")->check(CLI::PositiveNumber);
    app.add_flag("--json", opts.json, "machine-readable output");
    app.add_option("--out", opts.out, "write output to a file");

    std::string family, file, second_file, kind = "coloring", scheme;
    std::vector<std::string> params;
    bool extended = false, parallel = false;
    int bound = 0, genus = 0, g_param = 0;
    std::string which = "n", farey_color;

    auto * build = app.add_subcommand("build", "write a graph family as DIMACS");
    build->add_option("family", family, "kg, cg, kg-total, cg-total, sp, farey, octahedron-n, octahedron-c")->required();
    build->add_option("params", params, "family parameters");
    build->add_flag("--extended", extended, "F' instead of F for farey");

    auto * chromatic = app.add_subcommand("chromatic", "exact chromatic number of a DIMACS graph");
    chromatic->add_option("graph", file)->required();
    auto * clique = app.add_subcommand("clique", "exact clique number of a DIMACS graph");
    clique->add_option("graph", file)->required();

    auto * fverify = app.add_subcommand("fractional-verify", "check a fractional colouring or clique certificate");
    fverify->add_option("graph", file)->required();
    fverify->add_option("certificate", second_file)->required();
    fverify->add_option("--kind", kind, "coloring or clique")->check(CLI::IsMember({"coloring", "clique"}));

    auto * color = app.add_subcommand("color", "apply a named colouring: kneser N K, total N, farey-mod2 N, farey-mod3 N");
    color->add_option("scheme", scheme)->required()->check(CLI::IsMember({"kneser", "total", "farey-mod2", "farey-mod3"}));
    color->add_option("params", params);

    auto * domain = app.add_subcommand("domain", "Euler measure and colour of a homologous pair");
    domain->add_option("diagram", file, "diagram JSON")->required();

    auto * farey = app.add_subcommand("farey", "Farey graph truncation");
    farey->add_option("--bound", bound, "max(|p|, q)")->required();
    farey->add_flag("--extended", extended, "F' (|det| in {1,2})");
    farey->add_option("--color", farey_color)->check(CLI::IsMember({"mod2", "mod3"}));

    auto * octahedron = app.add_subcommand("octahedron", "the genus-two graphs N and C");
    octahedron->add_option("--which", which)->check(CLI::IsMember({"n", "c"}));

    auto * sp = app.add_subcommand("sp", "symplectic graph Sp(2g) over F_2");
    sp->add_option("--g", g_param, "genus")->required();

    auto * bounds = app.add_subcommand("bounds", "bounds on the chromatic number of the curve graph");
    bounds->add_option("--genus", genus)->required();

    auto * report = app.add_subcommand("report", "run every acceptance check");
    report->add_flag("--parallel", parallel, "run checks concurrently");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    SearchBudget budget{opts.budget};
    try {
        if (*build) {
            emit(opts, to_dimacs(build_family(family, params, extended)));
        }
        else if (*chromatic) {
            auto g = read_dimacs_file(file);
            auto r = chromatic_number(g, budget);
            if (opts.json)
                emit(opts, dump({{"chromatic_number", r.chromatic_number}, {"nodes", r.nodes},
                               {"witness", coloring_to_json(g, r.witness)}}));
            else
                emit(opts, std::to_string(r.chromatic_number) + "\n" + coloring_to_json(g, r.witness).dump() + "\n");
        }
        else if (*clique) {
            auto g = read_dimacs_file(file);
            auto r = clique_number(g, budget);
            if (opts.json)
                emit(opts, dump({{"clique_number", r.clique_number}, {"witness", vertex_names(g, r.witness)}}));
            else
                emit(opts, std::to_string(r.clique_number) + "\n" + vertex_names(g, r.witness).dump() + "\n");
        }
        else if (*fverify) {
            auto g = read_dimacs_file(file);
            auto cert = read_json_file(second_file);
            Rational value;
            try {
                value = kind == "coloring"
                    ? fractional::verify_fractional_coloring(g, fractional::coloring_from_json(g, cert))
                    : fractional::verify_fractional_clique(g, fractional::clique_from_json(g, cert), budget);
            }
            catch (const fractional::CertificateError & e) {
                emit(opts, dump({{"valid", false}, {"error", e.what()}, {"witness", vertex_names(g, e.witness)}}));
                return 1;
            }
            if (opts.json)
                emit(opts, dump({{"valid", true}, {"kind", kind}, {"value", to_string(value)}}));
            else
                emit(opts, to_string(value) + "\n");
        }
        else if (*color) {
            Graph g;
            Coloring c;
            if (scheme == "kneser") {
                expect_params(params, 2, "color kneser N K");
                int k = as_int(params, 1, "K");
                auto kg = kneser::build_kg(as_int(params, 0, "N"), k);
                g = kg.graph;
                c = kneser::classical_kneser_coloring_of(kg, k);
            }
            else if (scheme == "total") {
                expect_params(params, 1, "color total N");
                auto kg = kneser::build_total_kg(as_int(params, 0, "N"));
                g = kg.graph;
                c = kneser::total_coloring_of(kg);
            }
            else {
                expect_params(params, 1, "color " + scheme + " BOUND");
                int m = scheme == "farey-mod2" ? 2 : 3;
                auto f = special::build_farey(as_int(params, 0, "BOUND"), m == 3);
                g = f.graph;
                c = special::farey_mod_coloring_of(f, m);
            }
            auto j = coloring_to_json(g, c);
            j["proper"] = is_proper(g, c);
            j["scheme"] = scheme;
            emit(opts, dump(j));
            return j["proper"].get<bool>() ? 0 : 1;
        }
        else if (*domain) {
            auto diagram = surface::diagram_from_json(read_json_file(file));
            try {
                auto r = surface::homologous_color(diagram);
                nlohmann::json regions = nlohmann::json::object();
                for (std::size_t i = 0; i < diagram.regions.size(); ++i)
                    regions[diagram.regions[i].name] = r.domain.coefficients[i];
                auto j = nlohmann::json{{"measure", to_string(r.measure)}, {"f_prime", r.f_prime}, {"f", r.f},
                    {"domain", regions}};
                emit(opts, opts.json ? dump(j) : "m(D) = " + to_string(r.measure) + "\nf' = " +
                        std::to_string(r.f_prime) + "\nf = " + std::to_string(r.f) + "\n");
            }
            catch (const surface::NotHomologous & e) {
                emit(opts, dump({{"homologous", false}, {"error", e.what()}}));
                return 1;
            }
        }
        else if (*farey) {
            auto f = special::build_farey(bound, extended);
            if (opts.json) {
                nlohmann::json j{{"bound", bound}, {"extended", extended}, {"vertices", f.graph.size()},
                    {"edges", f.graph.edge_count()}, {"dimacs", to_dimacs(f.graph)}};
                if (! farey_color.empty())
                    j["coloring"] = farey_coloring_json(f, farey_color == "mod2" ? 2 : 3);
                emit(opts, dump(j));
            }
            else {
                std::string text = to_dimacs(f.graph);
                if (! farey_color.empty())
                    text += color_lines(f.graph, special::farey_mod_coloring_of(f, farey_color == "mod2" ? 2 : 3));
                emit(opts, text);
            }
        }
        else if (*octahedron) {
            auto o = special::build_octahedron_graphs();
            const auto & g = which == "n" ? o.n : o.c;
            if (opts.json) {
                auto r = chromatic_number(g, budget);
                emit(opts, dump({{"graph", which == "n" ? "N" : "C"}, {"vertices", g.size()}, {"edges", g.edge_count()},
                               {"chromatic_number", r.chromatic_number}, {"dimacs", to_dimacs(g)}}));
            }
            else
                emit(opts, to_dimacs(g));
        }
        else if (*sp) {
            auto g = special::build_sp(2 * g_param);
            if (opts.json) {
                auto s = special::srg_parameters(g);
                nlohmann::json srg = s ? nlohmann::json{s->v, s->k, s->lambda, s->mu} : nlohmann::json(nullptr);
                emit(opts, dump({{"genus", g_param}, {"vertices", g.size()}, {"edges", g.edge_count()},
                               {"srg", srg}, {"dimacs", to_dimacs(g)}}));
            }
            else
                emit(opts, to_dimacs(g));
        }
        else if (*bounds) {
            auto row = special::bounds_table(genus);
            if (opts.json)
                emit(opts, dump({{"genus", genus}, {"g_log_g", row.g_log_g_text},
                               {"sp_bound", row.sp_bound.str()}, {"upper", row.upper.str()}}));
            else
                emit(opts, "g log g            " + row.g_log_g_text + "\n(g-1)(2^(2g)-1)    " +
                        row.sp_bound.str() + "\ng 4^g              " + row.upper.str() + "\n");
        }
        else if (*report) {
            auto entries = report::run_all(budget, parallel);
            emit(opts, opts.json ? dump(report::to_json(entries)) : report::to_text(entries));
            return report::exit_code(entries);
        }
    }
    catch (const UsageError & e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const BudgetExhausted & e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
