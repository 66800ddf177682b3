#pragma once

#include <string>
#include <vector>

#include "minbound/graph.hpp"

namespace minbound {

enum class GraphFormat { dimacs, edgelist };

// A parsed graph plus whatever the file carried around it. Header/actual
// edge-count mismatches land in `warnings`, not in an error: corpus files
// get this wrong all the time.
struct GraphDocument {
    Graph graph;
    std::vector<std::string> comments;
    std::vector<std::string> warnings;
    GraphFormat source_format = GraphFormat::dimacs;
};

// DIMACS edge format: `c ...` comments, one `p edge N M` header, `e u v`
// lines with 1-based endpoints. Stored 0-based.
GraphDocument parse_dimacs(const std::string& text);

// Canonical DIMACS bytes: `p edge n m`, then edges ascending, 1-based.
// Comments are not preserved; output for a given graph is byte-exact.
std::string serialize_dimacs(const GraphDocument& doc);

// Plain edge list: `# ...` comments, optional first line `n N` to pin the
// vertex count, then `u v` 0-based per line. Without the override,
// n = 1 + max vertex id (0 for an empty file).
GraphDocument parse_edgelist(const std::string& text);

// Canonical edge-list bytes: `n N` then edges ascending, 0-based.
std::string serialize_edgelist(const GraphDocument& doc);

GraphDocument parse(const std::string& text, GraphFormat fmt);
std::string serialize(const GraphDocument& doc, GraphFormat fmt);

// Heuristic: DIMACS iff some line starts with "p " (edge-list lines never do).
GraphFormat sniff_format(const std::string& text);

}  // namespace minbound
