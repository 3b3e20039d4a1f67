#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmotif/temporal_graph.h"

namespace tmotif {

struct PatternEdge {
  int src;
  int dst;

  int endpoint(Endpoint which) const { return which == Endpoint::src ? src : dst; }
  bool touches(int v) const { return src == v || dst == v; }
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

class MotifError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed pattern with a total time order on its edges and a window delta.
/// The position of an edge in `edges()` is its rank in the time order.
class Motif {
 public:
  Motif(std::vector<PatternEdge> edges, Timestamp delta);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<PatternEdge>& edges() const { return edges_; }
  const PatternEdge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  Timestamp delta() const { return delta_; }

  /// Same pattern and order with a different window.
  Motif with_delta(Timestamp delta) const { return Motif(edges_, delta); }

 private:
  std::vector<PatternEdge> edges_;
  int num_vertices_ = 0;
  Timestamp delta_ = 0;
};

/// One "x y" line per edge, in time order. '#' lines and blank lines ignored.
Motif parse_motif(std::istream& in, Timestamp delta);
Motif load_motif_file(const std::string& path, Timestamp delta);

}  // namespace tmotif
