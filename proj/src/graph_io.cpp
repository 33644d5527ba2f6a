#include "hrush/graph_io.hpp"

#include "hrush/error.hpp"

#include <fstream>
#include <sstream>

namespace hrush {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
    , line_(line)
{
}

Graph parse_graph_text(std::istream& in)
{
    Graph g;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string kind;
        if (!(words >> kind))
            continue;
        std::vector<std::string> args;
        for (std::string w; words >> w;)
            args.push_back(w);
        try {
            if (kind == "v" && args.size() == 1)
                g.add_vertex(args[0]);
            else if (kind == "e" && args.size() == 2)
                g.add_edge(args[0], args[1]);
            else
                throw ParseError(number, "expected 'v <label>' or 'e <label> <label>', got '" + line + "'");
        } catch (const InputError& e) {
            throw ParseError(number, e.what());
        }
    }
    return g;
}

Graph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph_text(in);
}

Graph graph_from_json(const nlohmann::json& j)
{
    try {
        Graph g;
        for (const auto& v : j.at("vertices"))
            g.add_vertex(v.get<std::string>());
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError(0, "edge entries must be two-element arrays");
                g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
            }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed graph JSON: ") + e.what());
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.labelled_edges())
        edges.push_back({a, b});
    return {{"vertices", g.labels()}, {"edges", edges}};
}

Graph parse_graph(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_graph_text(text);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path)
{
    return parse_graph(read_file(path));
}

std::string format_graph_text(const Graph& g)
{
    std::ostringstream out;
    for (const auto& l : g.labels())
        out << "v " << l << '\n';
    for (const auto& [a, b] : g.labelled_edges())
        out << "e " << a << ' ' << b << '\n';
    return out.str();
}

} // namespace hrush
