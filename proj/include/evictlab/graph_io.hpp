#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "evictlab/graph.hpp"

namespace evictlab {

/*
 * graph6: printable ASCII encoding of simple graphs. A record is N(n)
 * followed by the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2),
 * x(0,3), ... packed big-endian into 6-bit groups, each group stored as one
 * byte with 63 added. N(n) is the single byte n+63 for n <= 62, otherwise
 * '~' followed by three 6-bit bytes. We accept n up to 64 only.
 */
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// One graph6 record per line; '>>graph6<<' headers, blank lines and
/// '#' comments are skipped.
std::vector<Graph> parse_graph6_stream(std::istream& in);

/// Plain text: "n m" header line, then m lines "u v", 0-indexed.
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

/// {"n": ..., "edges": [[u,v],...], "name": ...}
std::string emit_graph_json(const Graph& g);

}  // namespace evictlab
