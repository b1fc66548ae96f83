#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecol/graph.hpp"

namespace edgecol {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Edge list: "p <vertices> <edges>" then one "e <u> <v>" per edge copy,
// 0-indexed. Blank lines and lines starting with '#' or "c " are skipped.
Multigraph read_edge_list(std::istream& in);
// Rejects duplicate pairs as well.
SimpleGraph read_simple_graph(std::istream& in);
SimpleGraph read_simple_graph_file(const std::string& path);
void write_edge_list(std::ostream& out, const SimpleGraph& g);

struct ColoredEdge {
  VertexId u = 0, v = 0;
  int copy = 0;
  int color = 0;
};

struct ColoringFile {
  std::vector<ColoredEdge> edges;
  int palette = 0;
};

// "c <u> <v> <copy> <color>" per colored edge, then "k <palette>".
ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const ColoringFile& c);

// Lines for g.edges() order with copy 0.
ColoringFile coloring_for(const SimpleGraph& g, const std::vector<int>& colors, int palette);

// Maps the file onto g's edges (g.edges() order). Throws ParseError with
// line 0 when an entry names a missing edge or an edge repeats.
std::vector<int> colors_for(const SimpleGraph& g, const ColoringFile& c);

}  // namespace edgecol
