#pragma once

#include <iosfwd>
#include <string>

#include "domipoly/graph.hpp"

namespace domipoly {

// Text format: first line is the order n, then one `u v` line per edge
// (0-based). `#` starts a comment; blank lines are ignored.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

}  // namespace domipoly
