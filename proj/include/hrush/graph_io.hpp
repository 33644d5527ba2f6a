#pragma once

#include "hrush/graph.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace hrush {

// Parse failure carrying the 1-based line of the offending input (0 for JSON).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Line format: "v <label>" declares a vertex, "e <a> <b>" an edge. Blank
// lines and '#' comments are skipped. Edge endpoints must be declared first.
Graph parse_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);

// {"vertices": [...], "edges": [[a, b], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Accepts either format; JSON is detected by a leading '{'.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::string format_graph_text(const Graph& g);

std::string read_file(const std::string& path);

} // namespace hrush
