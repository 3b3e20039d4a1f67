#include "tmotif/brute_force.h"

#include <algorithm>

namespace tmotif::oracle {

namespace {

// Does the prefix edges[0..j] of a combination still satisfy the predicate?
bool prefix_ok(const Motif& motif, const TemporalGraph& g, const std::vector<EdgeId>& chosen,
               std::size_t j, std::vector<VertexId>& vertex_of) {
  std::fill(vertex_of.begin(), vertex_of.end(), kNoVertex);
  for (std::size_t i = 0; i <= j; ++i) {
    const TemporalEdge& e = g.edge(chosen[i]);
    if (i > 0 && g.edge(chosen[i - 1]).t >= e.t) return false;
    if (e.t - g.edge(chosen[0]).t > motif.delta()) return false;
    const PatternEdge& p = motif.edge(static_cast<int>(i));
    for (auto [x, v] : {std::pair{p.src, e.src}, std::pair{p.dst, e.dst}}) {
      if (vertex_of[x] == kNoVertex)
        vertex_of[x] = v;
      else if (vertex_of[x] != v)
        return false;
    }
  }
  for (std::size_t a = 0; a < vertex_of.size(); ++a)
    for (std::size_t b = a + 1; b < vertex_of.size(); ++b)
      if (vertex_of[a] != kNoVertex && vertex_of[a] == vertex_of[b]) return false;
  return true;
}

}  // namespace

void for_each_match(const Motif& motif, const TemporalGraph& g,
                    const std::function<void(const std::vector<EdgeId>&)>& f) {
  if (g.num_edges() > kMaxGraphEdges || motif.num_edges() > kMaxMotifEdges)
    throw TooLarge("brute force limited to 300 graph edges and 6 motif edges");
  const std::size_t m = g.num_edges(), l = static_cast<std::size_t>(motif.num_edges());
  if (m < l) return;
  std::vector<EdgeId> chosen(l);
  std::vector<VertexId> vertex_of(static_cast<std::size_t>(motif.num_vertices()));
  // Depth-first over combinations chosen[0] < chosen[1] < ...
  std::function<void(std::size_t, EdgeId)> go = [&](std::size_t j, EdgeId from) {
    for (EdgeId e = from; e < m; ++e) {
      if (j > 0 && g.edge(e).t - g.edge(chosen[0]).t > motif.delta()) break;
      chosen[j] = e;
      if (!prefix_ok(motif, g, chosen, j, vertex_of)) continue;
      if (j + 1 == l)
        f(chosen);
      else
        go(j + 1, e + 1);
    }
  };
  go(0, 0);
}

std::uint64_t brute_force_count(const Motif& motif, const TemporalGraph& g) {
  std::uint64_t count = 0;
  for_each_match(motif, g, [&](const std::vector<EdgeId>&) { ++count; });
  return count;
}

void for_each_partial_match(const SpanningTree& tree, const Motif& motif, const TemporalGraph& g,
                            const Window& window, const ConstraintSet& constraints,
                            const std::function<void(const PartialMatch&)>& f) {
  if (window.size() > kMaxWindowEdges) throw TooLarge("window too large for enumeration");
  struct Step {
    int parent;
    Dependency dep;
  };
  std::vector<Step> steps;
  for (int s : tree.descent_order())
    for (const Dependency& d : tree.dependencies(s)) steps.push_back({s, d});

  const Timestamp delta = motif.delta();
  PartialMatch pm;
  pm.edge_of.assign(static_cast<std::size_t>(motif.num_edges()), kNoEdge);
  pm.vertex_of.assign(static_cast<std::size_t>(motif.num_vertices()), kNoVertex);

  std::vector<EdgeId> window_edges;
  for (EdgeId id = window.begin; id < window.end; ++id)
    if (window.interval.contains(g.edge(id).t)) window_edges.push_back(id);

  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == steps.size()) {
      f(pm);
      return;
    }
    const Step& st = steps[j];
    const TemporalEdge& parent = g.edge(pm.edge_of[st.parent]);
    const PatternEdge& child = motif.edge(st.dep.child);
    for (EdgeId id : window_edges) {
      if (id == parent.id) continue;
      const TemporalEdge& c = g.edge(id);
      // Child endpoints must agree with vertices already mapped.
      if (pm.vertex_of[child.src] != kNoVertex && pm.vertex_of[child.src] != c.src) continue;
      if (pm.vertex_of[child.dst] != kNoVertex && pm.vertex_of[child.dst] != c.dst) continue;
      const bool side = st.dep.beta == Order::before ? (parent.t - delta <= c.t && c.t <= parent.t)
                                                     : (parent.t <= c.t && c.t <= parent.t + delta);
      if (!side) continue;
      const int shared = (c.src == parent.src || c.src == parent.dst) +
                         (c.dst == parent.src || c.dst == parent.dst);
      if (constraints.distinct_endpoints && shared != 1) continue;
      const VertexId old_src = pm.vertex_of[child.src], old_dst = pm.vertex_of[child.dst];
      pm.edge_of[st.dep.child] = id;
      pm.vertex_of[child.src] = c.src;
      pm.vertex_of[child.dst] = c.dst;
      go(j + 1);
      pm.vertex_of[child.src] = old_src;
      pm.vertex_of[child.dst] = old_dst;
      pm.edge_of[st.dep.child] = kNoEdge;
    }
  };

  const PatternEdge& center = motif.edge(tree.center());
  for (EdgeId id : window_edges) {
    const TemporalEdge& e = g.edge(id);
    pm.edge_of[tree.center()] = id;
    pm.vertex_of[center.src] = e.src;
    pm.vertex_of[center.dst] = e.dst;
    go(0);
    pm.vertex_of[center.src] = kNoVertex;
    pm.vertex_of[center.dst] = kNoVertex;
  }
  pm.edge_of[tree.center()] = kNoEdge;
}

std::uint64_t brute_force_partial_matches(const SpanningTree& tree, const Motif& motif,
                                          const TemporalGraph& g, const Window& window,
                                          const ConstraintSet& constraints) {
  std::uint64_t n = 0;
  for_each_partial_match(tree, motif, g, window, constraints, [&](const PartialMatch&) { ++n; });
  return n;
}

std::vector<PartialMatch> all_partial_matches(const SpanningTree& tree, const Motif& motif,
                                              const TemporalGraph& g, const Window& window,
                                              const ConstraintSet& constraints) {
  std::vector<PartialMatch> out;
  for_each_partial_match(tree, motif, g, window, constraints,
                         [&](const PartialMatch& pm) { out.push_back(pm); });
  return out;
}

std::uint64_t brute_force_list_count(const std::vector<std::vector<Timestamp>>& lists) {
  if (lists.empty()) return 1;
  std::vector<std::size_t> idx(lists.size(), 0);
  for (const auto& l : lists)
    if (l.empty()) return 0;
  std::uint64_t n = 0;
  while (true) {
    bool ok = true;
    for (std::size_t j = 1; j < lists.size() && ok; ++j) ok = lists[j - 1][idx[j - 1]] < lists[j][idx[j]];
    n += ok;
    std::size_t j = lists.size();
    while (j-- > 0) {
      if (++idx[j] < lists[j].size()) break;
      idx[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) return n;
  }
}

}  // namespace tmotif::oracle
