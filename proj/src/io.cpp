#include <curvecolor/io.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace curvecolor
{
    void write_dimacs(std::ostream & out, const Graph & g)
    {
        for (VertexIndex v = 0; v < g.size(); ++v)
            out << "c label " << (v + 1) << " " << g.label(v) << "\n";
        out << "p edge " << g.size() << " " << g.edge_count() << "\n";
        for (auto [u, v] : g.edges())
            out << "e " << (u + 1) << " " << (v + 1) << "\n";
    }

    auto to_dimacs(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_dimacs(out, g);
        return out.str();
    }

    auto read_dimacs(std::istream & in) -> Graph
    {
        std::map<std::size_t, std::string> labels;
        std::vector<std::pair<VertexIndex, VertexIndex>> edges;
        std::size_t declared_vertices = 0, declared_edges = 0;
        bool seen_problem = false;

        std::string line;
        std::size_t line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.empty())
                continue;
            std::istringstream fields(line);
            std::string tag;
            fields >> tag;
            auto where = " (line " + std::to_string(line_number) + ")";

            if (tag == "c") {
                std::string keyword;
                if (fields >> keyword && keyword == "label") {
                    std::size_t id = 0;
                    if (! (fields >> id) || id == 0)
                        throw FormatError("bad label id" + where);
                    std::string rest;
                    std::getline(fields >> std::ws, rest);
                    if (rest.empty())
                        throw FormatError("empty label" + where);
                    labels[id] = rest;
                }
            }
            else if (tag == "p") {
                std::string format;
                if (! (fields >> format >> declared_vertices >> declared_edges) || (format != "edge" && format != "col"))
                    throw FormatError("bad problem line" + where);
                seen_problem = true;
            }
            else if (tag == "e") {
                std::size_t u = 0, v = 0;
                if (! seen_problem)
                    throw FormatError("edge before problem line" + where);
                if (! (fields >> u >> v) || u == 0 || v == 0 || u > declared_vertices || v > declared_vertices)
                    throw FormatError("bad edge" + where);
                edges.emplace_back(u - 1, v - 1);
            }
            else
                throw FormatError("unknown line type '" + tag + "'" + where);
        }
        if (! seen_problem)
            throw FormatError("missing problem line");

        std::vector<std::string> names;
        names.reserve(declared_vertices);
        for (std::size_t id = 1; id <= declared_vertices; ++id) {
            auto it = labels.find(id);
            names.push_back(it == labels.end() ? std::to_string(id) : it->second);
        }
        for (const auto & [id, _] : labels)
            if (id > declared_vertices)
                throw FormatError("label for vertex " + std::to_string(id) + " beyond declared count");

        try {
            Graph g(std::move(names), edges);
            if (g.edge_count() != declared_edges)
                throw FormatError("problem line declares " + std::to_string(declared_edges) + " edges, found " +
                    std::to_string(g.edge_count()));
            return g;
        }
        catch (const std::invalid_argument & e) {
            throw FormatError(e.what());
        }
    }

    auto read_dimacs_file(const std::string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open '" + path + "'");
        return read_dimacs(in);
    }

    auto coloring_to_json(const Graph & g, const Coloring & c) -> nlohmann::json
    {
        nlohmann::json colours = nlohmann::json::object();
        for (VertexIndex v = 0; v < g.size(); ++v)
            colours[g.label(v)] = c.colors.at(v);
        return {{"palette_size", c.palette_size()}, {"colors", colours}};
    }

    auto coloring_from_json(const Graph & g, const nlohmann::json & j) -> Coloring
    {
        if (! j.contains("colors") || ! j["colors"].is_object())
            throw FormatError("colouring JSON needs a \"colors\" object");
        Coloring c{std::vector<int>(g.size(), -1)};
        for (const auto & [label, value] : j["colors"].items()) {
            auto v = g.index_of(label);
            if (! v)
                throw FormatError("colouring names unknown vertex '" + label + "'");
            c.colors[*v] = value.get<int>();
        }
        for (VertexIndex v = 0; v < g.size(); ++v)
            if (c.colors[v] < 0)
                throw FormatError("colouring misses vertex '" + g.label(v) + "'");
        return c;
    }

    auto read_json_file(const std::string & path) -> nlohmann::json
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open '" + path + "'");
        try {
            return nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw FormatError(path + ": " + e.what());
        }
    }
}
