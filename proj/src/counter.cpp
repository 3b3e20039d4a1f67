#include "tmotif/counter.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tmotif {

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "valid";
    case Violation::vertex_map: return "vertex_map";
    case Violation::delta_interval: return "delta_interval";
    case Violation::edge_order: return "edge_order";
  }
  return "unknown";
}

Violation validate(const PartialMatch& pm, const Motif& motif, const SpanningTree& tree,
                   const TemporalGraph& g) {
  std::vector<VertexId> mapped(pm.vertex_of);
  std::sort(mapped.begin(), mapped.end());
  if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return Violation::vertex_map;

  Timestamp lo = std::numeric_limits<Timestamp>::max(), hi = std::numeric_limits<Timestamp>::min();
  for (int s : tree.edges()) {
    const Timestamp t = g.edge(pm.edge_of[s]).t;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (hi - lo > motif.delta()) return Violation::delta_interval;

  // tree.edges() is sorted by motif position.
  Timestamp prev = std::numeric_limits<Timestamp>::min();
  for (int s : tree.edges()) {
    const Timestamp t = g.edge(pm.edge_of[s]).t;
    if (t <= prev) return Violation::edge_order;
    prev = t;
  }
  return Violation::none;
}

std::size_t compute_n_phi(std::span<const Timestamp> timestamps, const WindowPartition& partition) {
  if (timestamps.empty()) return 0;
  auto [lo, hi] = std::minmax_element(timestamps.begin(), timestamps.end());
  return partition.windows_containing(*lo, *hi);
}

std::size_t compute_n_phi(const PartialMatch& pm, const SpanningTree& tree, const TemporalGraph& g,
                          const WindowPartition& partition) {
  Timestamp lo = std::numeric_limits<Timestamp>::max(), hi = std::numeric_limits<Timestamp>::min();
  for (int s : tree.edges()) {
    const Timestamp t = g.edge(pm.edge_of[s]).t;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return partition.windows_containing(lo, hi);
}

namespace {

using Wide = unsigned __int128;

std::uint64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("count exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

// Tuples ending at each element of the last list.
std::vector<Wide> chain_end_counts(std::span<const std::vector<Timestamp>> lists) {
  std::vector<Wide> cur(lists[0].size(), 1);
  for (std::size_t j = 1; j < lists.size(); ++j) {
    const auto& prev_list = lists[j - 1];
    const auto& list = lists[j];
    std::vector<Wide> next(list.size());
    Wide running = 0;
    std::size_t p = 0;
    for (std::size_t y = 0; y < list.size(); ++y) {
      while (p < prev_list.size() && prev_list[p] < list[y]) running += cur[p++];
      next[y] = running;
    }
    cur = std::move(next);
  }
  return cur;
}

// Tuples starting at each element of the first list.
std::vector<Wide> chain_start_counts(std::span<const std::vector<Timestamp>> lists) {
  const std::size_t l = lists.size();
  std::vector<Wide> cur(lists[l - 1].size(), 1);
  for (std::size_t j = l - 1; j-- > 0;) {
    const auto& next_list = lists[j + 1];
    const auto& list = lists[j];
    std::vector<Wide> prev(list.size());
    Wide running = 0;
    std::size_t p = next_list.size();
    for (std::size_t x = list.size(); x-- > 0;) {
      while (p > 0 && next_list[p - 1] > list[x]) running += cur[--p];
      prev[x] = running;
    }
    cur = std::move(prev);
  }
  return cur;
}

bool any_empty(std::span<const std::vector<Timestamp>> lists) {
  return std::any_of(lists.begin(), lists.end(), [](const auto& l) { return l.empty(); });
}

Wide sum(const std::vector<Wide>& v) {
  Wide s = 0;
  for (Wide x : v) s += x;
  return s;
}

}  // namespace

std::uint64_t list_count(std::span<const std::vector<Timestamp>> lists) {
  if (lists.empty()) return 1;
  if (any_empty(lists)) return 0;
  return narrow(sum(chain_end_counts(lists)));
}

std::uint64_t derive_count(const Motif& motif, const SpanningTree& tree, const PartialMatch& pm,
                           const TemporalGraph& g) {
  const auto& tree_edges = tree.edges();
  const std::size_t gaps = tree_edges.size() + 1;
  std::vector<Timestamp> tree_t;
  for (int s : tree_edges) tree_t.push_back(g.edge(pm.edge_of[s]).t);
  const Timestamp first = tree_t.front(), last = tree_t.back();
  const Timestamp delta = motif.delta();

  // Non-tree edges grouped by the gap between consecutive tree positions they
  // fall into; gap 0 precedes every tree edge, gap |L| follows them all.
  std::vector<std::vector<std::vector<Timestamp>>> by_gap(gaps);
  std::size_t gap = 0;
  for (int i = 0; i < motif.num_edges(); ++i) {
    if (tree.contains(i)) {
      ++gap;
      continue;
    }
    const PatternEdge& p = motif.edge(i);
    const VertexId u = pm.vertex_of[p.src], v = pm.vertex_of[p.dst];
    if (u == kNoVertex || v == kNoVertex) throw std::logic_error("tree does not span the motif");
    Timestamp lo, hi;
    if (gap == 0) {
      lo = last - delta;
      hi = first - 1;
    } else if (gap == gaps - 1) {
      lo = last + 1;
      hi = first + delta;
    } else {
      lo = tree_t[gap - 1] + 1;
      hi = tree_t[gap] - 1;
    }
    std::vector<Timestamp> times;
    for (const AdjEntry& a : g.pair_range(u, v, lo, hi)) times.push_back(a.t);
    by_gap[gap].push_back(std::move(times));
  }

  Wide total = 1;
  for (std::size_t k = 1; k + 1 < gaps; ++k) {
    if (by_gap[k].empty()) continue;
    total *= list_count(by_gap[k]);
    if (total == 0) return 0;
    narrow(total);
  }

  const auto& lead = by_gap.front();
  const auto& trail = by_gap.back();
  Wide outer;
  if (lead.empty() && trail.empty()) {
    outer = 1;
  } else if (trail.empty()) {
    outer = list_count(lead);
  } else if (lead.empty()) {
    outer = list_count(trail);
  } else {
    // The earliest leading pick and the latest trailing pick bound the span.
    if (any_empty(lead) || any_empty(trail)) return 0;
    const std::vector<Wide> starts = chain_start_counts(lead);
    const std::vector<Wide> ends = chain_end_counts(trail);
    const auto& head = lead.front();
    const auto& tail = trail.back();
    outer = 0;
    Wide ending_by = 0;
    std::size_t p = 0;
    for (std::size_t x = 0; x < head.size(); ++x) {
      while (p < tail.size() && tail[p] <= head[x] + delta) ending_by += ends[p++];
      outer += starts[x] * ending_by;
    }
  }
  return narrow(total * outer);
}

SampleOutcome validate_and_derive(const Motif& motif, const SpanningTree& tree,
                                  const PartialMatch& pm, const TemporalGraph& g,
                                  const WindowPartition& partition) {
  SampleOutcome out;
  out.violation = validate(pm, motif, tree, g);
  if (!out.valid()) return out;
  out.derived = derive_count(motif, tree, pm, g);
  const std::size_t n_phi = compute_n_phi(pm, tree, g, partition);
  if (n_phi == 0 || n_phi > 3) throw std::logic_error("tree match outside every window");
  out.n_phi = static_cast<std::uint32_t>(n_phi);
  return out;
}

}  // namespace tmotif
