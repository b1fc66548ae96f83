#include "edgecol/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace edgecol {

namespace {

bool skip(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  if (pos == std::string::npos) return true;
  return line[pos] == '#';
}

template <typename... T>
void fields(std::istringstream& ss, int line, T&... out) {
  ((ss >> out), ...);
  if (!ss) throw ParseError(line, "malformed line");
  std::string extra;
  if (ss >> extra) throw ParseError(line, "trailing token '" + extra + "'");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long expected = -1;
  Multigraph g;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (header) throw ParseError(lineno, "second header line");
      long long n = 0;
      fields(ss, lineno, n, expected);
      if (n < 0 || expected < 0 || n > (1 << 20)) throw ParseError(lineno, "bad header counts");
      g = Multigraph(static_cast<int>(n));
      header = true;
    } else if (tag == "e") {
      if (!header) throw ParseError(lineno, "edge before header");
      long long u = 0, v = 0;
      fields(ss, lineno, u, v);
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw ParseError(lineno, "vertex out of range");
      if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing header line");
  if (g.edge_count() != expected)
    throw ParseError(lineno, "header announces " + std::to_string(expected) + " edges, found " +
                                 std::to_string(g.edge_count()));
  return g;
}

SimpleGraph read_simple_graph(std::istream& in) {
  const auto m = read_edge_list(in);
  SimpleGraph g(m.vertex_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto [u, v] = m.ends(e);
    if (g.has_edge(u, v)) throw ParseError(0, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

SimpleGraph read_simple_graph_file(const std::string& path) {
  auto in = open(path);
  return read_simple_graph(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  const auto edges = g.edges();
  out << "p " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
}

ColoringFile read_coloring(std::istream& in) {
  ColoringFile c;
  std::string line;
  int lineno = 0;
  bool trailer = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (trailer) throw ParseError(lineno, "content after palette line");
    if (tag == "c") {
      ColoredEdge e;
      fields(ss, lineno, e.u, e.v, e.copy, e.color);
      if (e.u < 0 || e.v < 0 || e.copy < 0 || e.color < 1) throw ParseError(lineno, "bad colored edge");
      c.edges.push_back(e);
    } else if (tag == "k") {
      fields(ss, lineno, c.palette);
      if (c.palette < 0) throw ParseError(lineno, "negative palette");
      trailer = true;
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!trailer) throw ParseError(lineno, "missing palette line");
  return c;
}

ColoringFile read_coloring_file(const std::string& path) {
  auto in = open(path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const ColoringFile& c) {
  for (const auto& e : c.edges) out << "c " << e.u << ' ' << e.v << ' ' << e.copy << ' ' << e.color << '\n';
  out << "k " << c.palette << '\n';
}

ColoringFile coloring_for(const SimpleGraph& g, const std::vector<int>& colors, int palette) {
  ColoringFile c;
  c.palette = palette;
  const auto edges = g.edges();
  for (std::size_t t = 0; t < edges.size(); ++t)
    if (colors[t] > 0) c.edges.push_back({edges[t].u, edges[t].v, 0, colors[t]});
  return c;
}

std::vector<int> colors_for(const SimpleGraph& g, const ColoringFile& c) {
  const auto edges = g.edges();
  std::map<Edge, int> index;
  for (std::size_t t = 0; t < edges.size(); ++t) index[edges[t]] = static_cast<int>(t);
  std::vector<int> out(edges.size(), 0);
  for (const auto& e : c.edges) {
    const Edge key = e.u < e.v ? Edge{e.u, e.v} : Edge{e.v, e.u};
    const auto it = index.find(key);
    if (it == index.end() || e.copy != 0)
      throw ParseError(0, "coloring names missing edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (out[it->second] != 0)
      throw ParseError(0, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " colored twice");
    out[it->second] = e.color;
  }
  return out;
}

}  // namespace edgecol
