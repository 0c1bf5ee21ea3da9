#pragma once

#include "miskit/graph.hpp"
#include "miskit/orthogonal.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace miskit {

/// A graph plus presentation metadata. Labels and provenance never influence
/// algorithms; provenance is excluded from equality.
struct GraphDocument {
    WeightedGraph graph;
    std::map<int, std::string> labels; // vertex index -> external name
    std::string provenance;            // source path or generator descriptor

    bool operator==(const GraphDocument& other) const {
        return graph == other.graph && labels == other.labels;
    }
};

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Text format, one record per line with '#' comments:
///   graph <n>
///   v <id> <weight>     (one per vertex)
///   e <u> <v>
/// Duplicate edges collapse; loops are rejected with their line number.
GraphDocument parse_graph(std::istream& in);
GraphDocument parse_graph(const std::string& text);

/// Canonical emission: vertices in index order, edges lexicographically
/// sorted, single spaces, newline-terminated. Byte-exact for equal documents.
std::string emit_graph(const GraphDocument& doc);

struct DotAnnotations {
    std::optional<VertexSet> highlight;                        // e.g. a solution set
    std::optional<std::vector<std::pair<int, int>>> pair_edges; // drawn bold
};

/// Undirected DOT with the weight in every node label; deterministic order.
std::string emit_dot(const GraphDocument& doc, const DotAnnotations& annotations = {});

} // namespace miskit
