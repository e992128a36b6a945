#pragma once

// Graph file I/O.
//
// Text format (one graph per file, '#' starts a comment):
//   vertices: w0 w1 ... w{n-1}
//   edges: i-j i-k ...
// JSON format: {"weights": [...], "edges": [[i,j], ...]}
// Readers accept either format (sniffed by the first non-space character);
// writers emit JSON by default.

#include <iosfwd>
#include <string>

#include "plumb/graph.hpp"

namespace plumb {

PlumbingGraph parse_graph(const std::string& content);      // throws ParseError
PlumbingGraph parse_graph_text(const std::string& content);
PlumbingGraph parse_graph_json(const std::string& content);

PlumbingGraph read_graph_file(const std::string& path);  // "-" means stdin

std::string serialize_graph_json(const PlumbingGraph& g);
std::string serialize_graph_text(const PlumbingGraph& g);

}  // namespace plumb
