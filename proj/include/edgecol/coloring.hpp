#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgecol/bitset.hpp"
#include "edgecol/graph.hpp"

namespace edgecol {

// Partial proper edge coloring of a Multigraph with colors 1..palette
// (0 means uncolored). Keeps, per vertex, the edge carrying each color and
// the set of missing colors. The graph may gain edges after construction;
// new edges start uncolored.
class EdgeColoring {
 public:
  EdgeColoring(const Multigraph& g, int palette);

  const Multigraph& graph() const { return *g_; }
  int palette() const { return k_; }
  // Growing adds fresh colors missing everywhere; shrinking requires that
  // no dropped color is in use.
  void set_palette(int k);

  int color(int e) const { return e < static_cast<int>(color_.size()) ? color_[e] : 0; }
  // Edge at v colored c, or -1.
  int edge_at(VertexId v, int c) const { return at_[v][c]; }
  // Other end of the c-edge at v, or -1.
  VertexId mate(VertexId v, int c) const;
  bool is_missing(VertexId v, int c) const { return missing_[v].test(c); }
  // Bit c set iff color c is missing at v (bit 0 unused).
  const DynBitset& missing(VertexId v) const { return missing_[v]; }
  int missing_count(VertexId v) const { return missing_[v].count(); }
  // Lowest missing color at v, or 0 if none.
  int first_missing(VertexId v) const;

  void assign(int e, int c);
  void unassign(int e);

  int class_size(int c) const { return class_size_[c]; }
  int colored_count() const { return colored_; }
  // Per-edge colors indexed by edge id, sized to the graph's edge count.
  std::vector<int> colors() const;
  // Number of distinct colors in use.
  int colors_used() const;

 private:
  const Multigraph* g_;
  int k_;
  int colored_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> at_;
  std::vector<DynBitset> missing_;
  std::vector<int> class_size_;
};

struct ProperCheck {
  bool ok = true;
  VertexId vertex = -1;  // first vertex where a color repeats
  int color = 0;
  explicit operator bool() const { return ok; }
};

// Checks properness from scratch. colors[e] is the color of edge e (0 for
// uncolored); missing trailing entries count as uncolored.
ProperCheck validate_proper(const Multigraph& g, std::span<const int> colors);
ProperCheck validate_proper(const EdgeColoring& c);

// Recounts every table of c from its per-edge colors; false on any drift.
bool consistent(const EdgeColoring& c);

// Swaps colors i and j on the (i,j)-component containing start and returns
// the edges touched. No-op when start misses both colors.
std::vector<int> kempe_swap(EdgeColoring& c, VertexId start, int i, int j);

struct EqualizeOptions {
  int lo = 1;   // color range to balance
  int hi = -1;  // -1: palette
  // Only vertices in scope count toward class sizes and chain starts. All
  // edges of colors in [lo,hi] must lie inside scope.
  std::optional<DynBitset> scope;
};

// Rebalances classes in [lo,hi] until sizes differ by at most one, swapping
// (i,j)-paths whose end edges both carry the larger class j, where i is the
// smallest and j the largest class. Returns the number of swaps.
int equalize(EdgeColoring& c, const EqualizeOptions& opts = {});

std::vector<int> class_sizes(const EdgeColoring& c, int lo, int hi);

// For every color i in [1, min(palette, max degree)]: the number of scope
// vertices missing i has the parity of the scope size.
bool parity_check(const EdgeColoring& c, const std::optional<DynBitset>& scope = std::nullopt);

}  // namespace edgecol
