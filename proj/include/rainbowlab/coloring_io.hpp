#pragma once

#include <iosfwd>
#include <string>

#include "rainbowlab/colorings.hpp"

namespace rainbowlab {

// Text format:
//   graph complete <n>      |  graph bipartite2 <n>
//   <a> <b> <color>         one line per edge, any order, each edge once
// Bipartite left vertices are written "u" and "v"; columns and complete-graph
// vertices are 0-based decimal.  Blank lines and '#' comments are ignored.
Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);

// Emits edge-index order with canonical colors.
void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring_file(const std::string& path, const Coloring& c);

}  // namespace rainbowlab
