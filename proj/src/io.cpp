#include "miskit/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace miskit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t)
        tokens.push_back(t);
    return tokens;
}

template <typename T> T parse_number(const std::string& token, int line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(line, std::string("expected ") + what + ", got '" + token + "'");
    return value;
}

} // namespace

GraphDocument parse_graph(std::istream& in) {
    int line_no = 0;
    int n = -1;
    std::vector<Weight> weights;
    std::vector<bool> weight_seen;
    std::vector<std::pair<int, int>> edges;

    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto tokens = tokenize(raw);
        if (tokens.empty())
            continue;

        if (n < 0) {
            if (tokens[0] != "graph" || tokens.size() != 2)
                throw parse_error(line_no, "expected header 'graph <n>'");
            n = parse_number<int>(tokens[1], line_no, "vertex count");
            if (n < 0)
                throw parse_error(line_no, "vertex count must be non-negative");
            weights.assign(static_cast<std::size_t>(n), 0);
            weight_seen.assign(static_cast<std::size_t>(n), false);
            continue;
        }

        if (tokens[0] == "v") {
            if (tokens.size() != 3)
                throw parse_error(line_no, "expected 'v <id> <weight>'");
            int id = parse_number<int>(tokens[1], line_no, "vertex id");
            if (id < 0 || id >= n)
                throw parse_error(line_no, "unknown vertex id " + std::to_string(id));
            if (weight_seen[static_cast<std::size_t>(id)])
                throw parse_error(line_no, "duplicate vertex id " + std::to_string(id));
            weights[static_cast<std::size_t>(id)] =
                parse_number<Weight>(tokens[2], line_no, "non-negative weight");
            weight_seen[static_cast<std::size_t>(id)] = true;
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3)
                throw parse_error(line_no, "expected 'e <u> <v>'");
            int u = parse_number<int>(tokens[1], line_no, "vertex id");
            int v = parse_number<int>(tokens[2], line_no, "vertex id");
            if (u < 0 || u >= n)
                throw parse_error(line_no, "unknown vertex id " + std::to_string(u));
            if (v < 0 || v >= n)
                throw parse_error(line_no, "unknown vertex id " + std::to_string(v));
            if (u == v)
                throw parse_error(line_no, "loop edge at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
        } else {
            throw parse_error(line_no, "unknown record '" + tokens[0] + "'");
        }
    }

    if (n < 0)
        throw parse_error(line_no + 1, "missing 'graph <n>' header");
    for (int v = 0; v < n; ++v)
        if (!weight_seen[static_cast<std::size_t>(v)])
            throw parse_error(line_no + 1, "missing vertex line for id " + std::to_string(v));

    GraphDocument doc;
    doc.graph = WeightedGraph(n, std::move(weights), edges);
    return doc;
}

GraphDocument parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

std::string emit_graph(const GraphDocument& doc) {
    const auto& g = doc.graph;
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << v << " " << g.weight(v) << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string emit_dot(const GraphDocument& doc, const DotAnnotations& annotations) {
    const auto& g = doc.graph;
    std::ostringstream out;
    out << "graph {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (auto it = doc.labels.find(v); it != doc.labels.end())
            out << it->second;
        else
            out << v;
        out << " (" << g.weight(v) << ")\"";
        if (annotations.highlight && annotations.highlight->contains(v))
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    auto is_pair_edge = [&](int u, int v) {
        if (!annotations.pair_edges)
            return false;
        return std::find(annotations.pair_edges->begin(), annotations.pair_edges->end(),
                         std::make_pair(u, v)) != annotations.pair_edges->end();
    };
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (is_pair_edge(u, v))
            out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace miskit
