#include "tmotif/spanning_tree.h"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace tmotif {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

SpanningTree::SpanningTree(const Motif& motif, std::vector<int> tree_edges, int center)
    : edges_(std::move(tree_edges)), center_(center) {
  const int k = motif.num_vertices();
  const int m = motif.num_edges();
  std::sort(edges_.begin(), edges_.end());
  if (static_cast<int>(edges_.size()) != k - 1)
    throw MotifError("spanning tree must have exactly k-1 edges");
  in_tree_.assign(m, false);
  for (int e : edges_) {
    if (e < 0 || e >= m) throw MotifError("tree edge index out of range");
    if (in_tree_[e]) throw MotifError("duplicate tree edge");
    in_tree_[e] = true;
  }
  if (center_ < 0 || center_ >= m || !in_tree_[center_])
    throw MotifError("center edge is not a tree edge");

  std::vector<int> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  for (int e : edges_) {
    int a = find_root(uf, motif.edge(e).src), b = find_root(uf, motif.edge(e).dst);
    if (a == b) throw MotifError("tree edges contain a cycle");
    uf[a] = b;
  }

  height_.assign(m, -1);
  parent_.assign(m, -1);
  deps_.assign(m, {});

  // Children of edge s attach at `vertex`, which is s's `anchor` endpoint.
  auto attach_children = [&](int s, Endpoint anchor) {
    const int vertex = motif.edge(s).endpoint(anchor);
    for (int c : edges_) {
      if (c == s || c == parent_[s] || !motif.edge(c).touches(vertex)) continue;
      if (c == center_ || parent_[c] != -1) continue;
      parent_[c] = s;
      Direction alpha = motif.edge(c).src == vertex ? Direction::out : Direction::in;
      Order beta = c < s ? Order::before : Order::after;
      deps_[s].push_back(Dependency{c, anchor, alpha, beta});
    }
  };

  std::deque<int> queue{center_};
  attach_children(center_, Endpoint::src);
  attach_children(center_, Endpoint::dst);
  std::vector<bool> seen(m, false);
  seen[center_] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    descent_.push_back(s);
    for (const auto& d : deps_[s]) {
      if (seen[d.child]) continue;
      seen[d.child] = true;
      // The far endpoint of the child (not shared with s) hosts its children.
      const int shared = motif.edge(s).endpoint(d.anchor);
      Endpoint lower = motif.edge(d.child).src == shared ? Endpoint::dst : Endpoint::src;
      attach_children(d.child, lower);
      queue.push_back(d.child);
    }
  }
  for (auto& list : deps_)
    std::sort(list.begin(), list.end(),
              [](const Dependency& a, const Dependency& b) { return a.child < b.child; });
  if (descent_.size() != edges_.size()) throw MotifError("tree edges are not connected");

  for (auto it = descent_.rbegin(); it != descent_.rend(); ++it) {
    int h = 0;
    for (const auto& d : deps_[*it]) h = std::max(h, height_[d.child] + 1);
    height_[*it] = h;
  }
  levels_.assign(height_[center_] + 1, {});
  for (int e : edges_) levels_[height_[e]].push_back(e);

  for ([[maybe_unused]] int e : edges_)
    for ([[maybe_unused]] const auto& d : deps_[e]) assert((d.beta == Order::before) == (d.child < e));

  looseness_ = constraint_looseness(*this, motif);
}

std::string SpanningTree::describe() const {
  std::ostringstream os;
  os << "center=" << center_ << " edges=[";
  for (std::size_t i = 0; i < edges_.size(); ++i) os << (i ? "," : "") << edges_[i];
  os << "]";
  return os.str();
}

int constraint_looseness(const SpanningTree& tree, const Motif& motif) {
  int total = 0;
  for (int u = 0; u < motif.num_vertices(); ++u) {
    std::vector<int> incident;
    for (int e : tree.edges())
      if (motif.edge(e).touches(u)) incident.push_back(e);
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        total += std::abs(std::abs(incident[j] - incident[i]) - 1);
  }
  return total;
}

std::vector<SpanningTree> enumerate_rooted_spanning_trees(const Motif& motif) {
  const int k = motif.num_vertices();
  const int m = motif.num_edges();
  std::vector<std::vector<int>> edge_sets;
  std::vector<int> chosen;

  // DFS over include/exclude decisions in edge order; union-find state is
  // rebuilt per node, which is cheap at motif sizes.
  auto acyclic = [&](const std::vector<int>& set) {
    std::vector<int> uf(k);
    std::iota(uf.begin(), uf.end(), 0);
    for (int e : set) {
      int a = find_root(uf, motif.edge(e).src), b = find_root(uf, motif.edge(e).dst);
      if (a == b) return false;
      uf[a] = b;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == k - 1) {
      edge_sets.push_back(chosen);
      return;
    }
    if (m - next < k - 1 - static_cast<int>(chosen.size())) return;
    chosen.push_back(next);
    if (acyclic(chosen)) self(self, next + 1);
    chosen.pop_back();
    self(self, next + 1);
  };
  dfs(dfs, 0);

  std::vector<SpanningTree> out;
  for (const auto& set : edge_sets)
    for (int root : set) out.emplace_back(motif, set, root);
  return out;
}

}  // namespace tmotif
