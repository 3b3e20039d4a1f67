#pragma once

#include <string>
#include <vector>

#include "tmotif/motif.h"

namespace tmotif {

/// Child edge of a tree edge. `anchor` names the endpoint of the parent edge
/// the child hangs off, `alpha` the child's direction at that shared vertex and
/// `beta` the child's time order relative to the parent.
struct Dependency {
  int child;
  Endpoint anchor;
  Direction alpha;
  Order beta;
};

/// A spanning tree of a motif rooted at a center edge. All per-edge vectors are
/// indexed by motif edge index; entries for non-tree edges are unused.
class SpanningTree {
 public:
  /// Builds the rooted tree over `tree_edges` (motif edge indices) rooted at
  /// `center`. Throws MotifError if the edges do not span the motif or do not
  /// form a tree.
  SpanningTree(const Motif& motif, std::vector<int> tree_edges, int center);

  const std::vector<int>& edges() const { return edges_; }
  int center() const { return center_; }
  bool contains(int motif_edge) const { return in_tree_[motif_edge]; }
  int height(int motif_edge) const { return height_[motif_edge]; }
  int tree_height() const { return height_[center_]; }
  bool is_leaf(int motif_edge) const { return deps_[motif_edge].empty(); }
  int parent(int motif_edge) const { return parent_[motif_edge]; }
  const std::vector<Dependency>& dependencies(int motif_edge) const { return deps_[motif_edge]; }
  /// Tree edges grouped by height; levels()[0] holds the leaves.
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  /// Tree edges in top-down order (center first, parents before children).
  const std::vector<int>& descent_order() const { return descent_; }
  int num_motif_edges() const { return static_cast<int>(in_tree_.size()); }

  int looseness() const { return looseness_; }

  std::string describe() const;

 private:
  std::vector<int> edges_;
  int center_;
  std::vector<bool> in_tree_;
  std::vector<int> height_;
  std::vector<int> parent_;
  std::vector<std::vector<Dependency>> deps_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> descent_;
  int looseness_ = 0;
};

/// Every spanning tree of the motif's underlying undirected pattern, once per
/// choice of center edge. Edge sets come out in lexicographic order of their
/// sorted edge indices; roots follow the edge order within each set.
std::vector<SpanningTree> enumerate_rooted_spanning_trees(const Motif& motif);

/// Sum over motif vertices u and unordered pairs of tree edges at u of
/// |rank difference - 1|. Zero when every pair of adjacent tree edges is
/// consecutive in the motif's time order.
int constraint_looseness(const SpanningTree& tree, const Motif& motif);

}  // namespace tmotif
