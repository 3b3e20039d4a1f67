#include "synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tmotif::testing {

std::vector<RawEdge> g0_edges() {
  return {{1, 2, 10}, {2, 3, 15}, {2, 3, 20}, {3, 1, 25}, {3, 4, 30}, {1, 3, 12}};
}

TemporalGraph g0() { return TemporalGraph::from_edges(g0_edges()); }

Motif motif_from(const std::vector<std::pair<int, int>>& edges, Timestamp delta) {
  std::vector<PatternEdge> p;
  for (auto [a, b] : edges) p.push_back({a, b});
  return Motif(std::move(p), delta);
}

Motif path2(Timestamp delta) { return motif_from({{0, 1}, {1, 2}}, delta); }
Motif triangle(Timestamp delta) { return motif_from({{0, 1}, {1, 2}, {2, 0}}, delta); }
Motif cycle4(Timestamp delta) { return motif_from({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, delta); }
Motif clique4(Timestamp delta) {
  return motif_from({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}, delta);
}
Motif path5(Timestamp delta) { return motif_from({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, delta); }
Motif star5(Timestamp delta) { return motif_from({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, delta); }

std::vector<RawEdge> synthetic_edges(const SyntheticParams& p) {
  std::mt19937_64 rng(p.seed);
  std::vector<double> popularity(p.vertices);
  for (std::size_t r = 0; r < p.vertices; ++r) popularity[r] = std::pow(static_cast<double>(r + 1), -p.exponent);
  std::discrete_distribution<std::size_t> pick_vertex(popularity.begin(), popularity.end());
  std::uniform_int_distribution<std::size_t> any_vertex(0, p.vertices - 1);
  std::uniform_int_distribution<Timestamp> center(0, p.span);
  std::uniform_int_distribution<Timestamp> jitter(0, p.burst_width);
  std::uniform_int_distribution<std::size_t> group_size(p.group_min, p.group_max);
  std::uniform_int_distribution<std::size_t> burst_size(p.burst_min, p.burst_max);
  std::bernoulli_distribution isolated(p.background);

  std::vector<RawEdge> out;
  out.reserve(p.edges);
  std::vector<std::int64_t> group;
  while (out.size() < p.edges) {
    if (isolated(rng)) {
      const auto u = static_cast<std::int64_t>(pick_vertex(rng));
      const auto v = static_cast<std::int64_t>(any_vertex(rng));
      if (u != v) out.push_back({u, v, center(rng)});
      continue;
    }
    group.clear();
    const std::size_t want = group_size(rng);
    for (int guard = 0; group.size() < want && guard < 100; ++guard) {
      const auto v = static_cast<std::int64_t>(pick_vertex(rng));
      if (std::find(group.begin(), group.end(), v) == group.end()) group.push_back(v);
    }
    if (group.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> member(0, group.size() - 1);
    const Timestamp t0 = center(rng);
    const std::size_t n = std::min(burst_size(rng), p.edges - out.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = member(rng), b = member(rng);
      if (a == b) continue;
      out.push_back({group[a], group[b], t0 + jitter(rng)});
    }
  }
  return out;
}

TemporalGraph synthetic_graph(const SyntheticParams& p) { return TemporalGraph::from_edges(synthetic_edges(p)); }

TemporalGraph random_small_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                 Timestamp max_time) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<std::int64_t> vertex(0, static_cast<std::int64_t>(n) - 1);
  std::uniform_int_distribution<Timestamp> time(0, max_time);
  std::vector<RawEdge> raw;
  while (raw.size() < m) {
    const auto u = vertex(rng), v = vertex(rng);
    if (u != v) raw.push_back({u, v, time(rng)});
  }
  return TemporalGraph::from_edges(std::move(raw));
}

Motif random_motif(std::mt19937_64& rng, int vertices, int edges, Timestamp delta) {
  // A random spanning tree first, then extra edges anywhere; order shuffled.
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < vertices; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (std::bernoulli_distribution(0.5)(rng))
      e.emplace_back(u, v);
    else
      e.emplace_back(v, u);
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  while (static_cast<int>(e.size()) < edges) {
    const int a = any(rng), b = any(rng);
    if (a != b) e.emplace_back(a, b);
  }
  std::shuffle(e.begin(), e.end(), rng);
  return motif_from(e, delta);
}

}  // namespace tmotif::testing
