#pragma once

#include <curvecolor/graph.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace curvecolor
{
    /// Raised on malformed DIMACS or JSON input.
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// DIMACS ".col": 1-based ids, "c label <id> <string>" comment lines carry
    /// the vertex labels, then "p edge <n> <m>" and one "e <u> <v>" per edge.
    void write_dimacs(std::ostream & out, const Graph & g);
    auto to_dimacs(const Graph & g) -> std::string;

    /// Vertices without a label comment are named by their DIMACS id.
    auto read_dimacs(std::istream & in) -> Graph;
    auto read_dimacs_file(const std::string & path) -> Graph;

    /// {"palette_size": k, "colors": {"<label>": c}}
    auto coloring_to_json(const Graph & g, const Coloring & c) -> nlohmann::json;
    auto coloring_from_json(const Graph & g, const nlohmann::json & j) -> Coloring;

    auto read_json_file(const std::string & path) -> nlohmann::json;
}
