#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hubres/graph.hpp"

namespace hubres {

// graph6 tokens for graphs on 2..62 vertices: one printable ASCII token per
// graph, first byte 63+n, then the upper triangle of the adjacency matrix
// in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
// byte (most significant bit first), each byte offset by 63, padded with
// zero bits. Throws std::invalid_argument on malformed input.
Graph parse_graph6(const std::string& token);
std::string write_graph6(const Graph& g);

// One token per line; blank lines ignored, optional ">>graph6<<" header.
std::vector<std::string> read_graph6_lines(std::istream& in);

// Whitespace-separated "u w" pairs, one edge per line, '#' starts a comment.
// Vertices are 0..max id seen. Duplicate edges (in either order) collapse.
// Throws std::invalid_argument on self-loops, non-integer tokens, or ids
// that leave a vertex with no incident edge.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

}  // namespace hubres
