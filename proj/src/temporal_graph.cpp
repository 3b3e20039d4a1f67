#include "tmotif/temporal_graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <tuple>

namespace tmotif {

namespace {

auto time_lower(std::span<const AdjEntry> list, Timestamp lo) {
  return std::lower_bound(list.begin(), list.end(), lo,
                          [](const AdjEntry& a, Timestamp t) { return a.t < t; });
}

auto time_upper(std::span<const AdjEntry> list, Timestamp hi) {
  return std::upper_bound(list.begin(), list.end(), hi,
                          [](Timestamp t, const AdjEntry& a) { return t < a.t; });
}

std::span<const AdjEntry> clip(std::span<const AdjEntry> list, Timestamp lo, Timestamp hi) {
  if (lo > hi) return {};
  auto first = time_lower(list, lo);
  auto last = time_upper(std::span<const AdjEntry>(first, list.end()), hi);
  return {first, last};
}

void build_csr(std::size_t n, const std::vector<TemporalEdge>& edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<AdjEntry>& adj) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(outgoing ? e.src : e.dst) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adj.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Edges are visited in id order, so every list comes out sorted by (t, id).
  for (const auto& e : edges) {
    VertexId owner = outgoing ? e.src : e.dst;
    VertexId other = outgoing ? e.dst : e.src;
    adj[cursor[owner]++] = AdjEntry{e.t, other, e.id};
  }
}

}  // namespace

TemporalGraph TemporalGraph::from_edges(std::vector<RawEdge> raw, LoadStats* stats) {
  LoadStats local;
  LoadStats& st = stats ? *stats : local;

  std::erase_if(raw, [&](const RawEdge& r) {
    if (r.src != r.dst) return false;
    ++st.self_loops;
    return true;
  });
  std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.t, a.src, a.dst) < std::tie(b.t, b.src, b.dst);
  });
  auto dup = std::unique(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return a.t == b.t && a.src == b.src && a.dst == b.dst;
  });
  st.duplicates += static_cast<std::size_t>(raw.end() - dup);
  raw.erase(dup, raw.end());

  if (raw.size() >= static_cast<std::size_t>(kNoEdge))
    throw std::length_error("too many edges for 32-bit edge ids");

  TemporalGraph g;
  for (const auto& r : raw) {
    g.original_ids_.push_back(r.src);
    g.original_ids_.push_back(r.dst);
  }
  std::sort(g.original_ids_.begin(), g.original_ids_.end());
  g.original_ids_.erase(std::unique(g.original_ids_.begin(), g.original_ids_.end()),
                        g.original_ids_.end());

  g.time_offset_ = raw.empty() ? 0 : raw.front().t;
  g.edges_.reserve(raw.size());
  g.times_.reserve(raw.size());
  for (const auto& r : raw) {
    TemporalEdge e;
    e.id = static_cast<EdgeId>(g.edges_.size());
    e.src = *g.find_vertex(r.src);
    e.dst = *g.find_vertex(r.dst);
    e.t = r.t - g.time_offset_;
    g.edges_.push_back(e);
    g.times_.push_back(e.t);
  }

  const std::size_t n = g.num_vertices();
  build_csr(n, g.edges_, true, g.out_offsets_, g.out_adj_);
  build_csr(n, g.edges_, false, g.in_offsets_, g.in_adj_);
  g.pair_adj_ = g.out_adj_;
  for (std::size_t v = 0; v < n; ++v) {
    std::stable_sort(g.pair_adj_.begin() + static_cast<std::ptrdiff_t>(g.out_offsets_[v]),
                     g.pair_adj_.begin() + static_cast<std::ptrdiff_t>(g.out_offsets_[v + 1]),
                     [](const AdjEntry& a, const AdjEntry& b) { return a.other < b.other; });
  }
  return g;
}

std::optional<VertexId> TemporalGraph::find_vertex(std::int64_t original) const {
  auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
  if (it == original_ids_.end() || *it != original) return std::nullopt;
  return static_cast<VertexId>(it - original_ids_.begin());
}

std::span<const AdjEntry> TemporalGraph::adjacency(VertexId v, Direction dir) const {
  if (v >= num_vertices()) return {};
  const auto& offsets = dir == Direction::out ? out_offsets_ : in_offsets_;
  const auto& adj = dir == Direction::out ? out_adj_ : in_adj_;
  return std::span<const AdjEntry>(adj).subspan(offsets[v], offsets[v + 1] - offsets[v]);
}

std::span<const AdjEntry> TemporalGraph::temporal_range(VertexId v, Direction dir, Timestamp lo,
                                                        Timestamp hi) const {
  return clip(adjacency(v, dir), lo, hi);
}

std::vector<TemporalEdge> TemporalGraph::temporal_list(VertexId v, Direction dir, Timestamp lo,
                                                       Timestamp hi) const {
  return materialize(temporal_range(v, dir, lo, hi));
}

std::span<const AdjEntry> TemporalGraph::pair_range(VertexId u, VertexId v, Timestamp lo,
                                                    Timestamp hi) const {
  if (u >= num_vertices() || v >= num_vertices()) return {};
  std::span<const AdjEntry> all(pair_adj_.data() + out_offsets_[u],
                                out_offsets_[u + 1] - out_offsets_[u]);
  auto first = std::lower_bound(all.begin(), all.end(), v,
                                [](const AdjEntry& a, VertexId x) { return a.other < x; });
  auto last = std::upper_bound(first, all.end(), v,
                               [](VertexId x, const AdjEntry& a) { return x < a.other; });
  return clip(std::span<const AdjEntry>(first, last), lo, hi);
}

std::vector<TemporalEdge> TemporalGraph::multiedge_list(VertexId u, VertexId v, PairDirection dir,
                                                        Timestamp lo, Timestamp hi) const {
  return dir == PairDirection::forward ? materialize(pair_range(u, v, lo, hi))
                                       : materialize(pair_range(v, u, lo, hi));
}

std::size_t TemporalGraph::multiplicity(VertexId u, VertexId v, Timestamp lo, Timestamp hi) const {
  return pair_range(u, v, lo, hi).size();
}

std::pair<EdgeId, EdgeId> TemporalGraph::edge_range(Timestamp lo, Timestamp hi) const {
  if (lo > hi) return {0, 0};
  auto first = std::lower_bound(times_.begin(), times_.end(), lo);
  auto last = std::upper_bound(first, times_.end(), hi);
  return {static_cast<EdgeId>(first - times_.begin()), static_cast<EdgeId>(last - times_.begin())};
}

CandidateRange TemporalGraph::candidate_range(const TemporalEdge& e, Endpoint anchor,
                                              Direction alpha, Order beta, Timestamp delta,
                                              TimeInterval window, bool exclude_shared) const {
  Timestamp lo = beta == Order::before ? e.t - delta : e.t;
  Timestamp hi = beta == Order::before ? e.t : e.t + delta;
  lo = std::max(lo, window.lo);
  hi = std::min(hi, window.hi);
  CandidateRange r;
  r.vertex = e.endpoint(anchor);
  r.alpha = alpha;
  r.lo = lo;
  r.hi = hi;
  r.entries = temporal_range(r.vertex, alpha, lo, hi);
  r.excluded = exclude_shared ? e.opposite(anchor) : kNoVertex;
  r.self = e.id;
  return r;
}

std::size_t TemporalGraph::candidate_count(const CandidateRange& r) const {
  std::size_t n = r.entries.size();
  if (n == 0) return 0;
  if (r.excluded != kNoVertex) {
    n -= r.alpha == Direction::out ? multiplicity(r.vertex, r.excluded, r.lo, r.hi)
                                   : multiplicity(r.excluded, r.vertex, r.lo, r.hi);
  }
  if (r.self != kNoEdge) {
    const TemporalEdge& e = edges_[r.self];
    const bool incident = r.alpha == Direction::out ? e.src == r.vertex : e.dst == r.vertex;
    const VertexId far = r.alpha == Direction::out ? e.dst : e.src;
    if (incident && far != r.excluded && r.lo <= e.t && e.t <= r.hi) --n;
  }
  return n;
}

std::vector<TemporalEdge> TemporalGraph::candidate_list(const TemporalEdge& e, Endpoint anchor,
                                                        Direction alpha, Order beta,
                                                        Timestamp delta, TimeInterval window,
                                                        bool exclude_shared) const {
  std::vector<TemporalEdge> out;
  candidate_range(e, anchor, alpha, beta, delta, window, exclude_shared)
      .for_each([&](const AdjEntry& a) { out.push_back(edges_[a.id]); });
  return out;
}

std::vector<TemporalEdge> TemporalGraph::materialize(std::span<const AdjEntry> range) const {
  std::vector<TemporalEdge> out;
  out.reserve(range.size());
  for (const auto& a : range) out.push_back(edges_[a.id]);
  return out;
}

namespace {

bool parse_int(std::string_view& s, std::int64_t& value) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t'))
    return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

TemporalGraph load_graph(std::istream& in, LoadStats* stats) {
  LoadStats local;
  LoadStats& st = stats ? *stats : local;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view s(line);
    auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos || s[first] == '#') continue;
    RawEdge r{};
    if (!parse_int(s, r.src) || !parse_int(s, r.dst) || !parse_int(s, r.t))
      throw ParseError(lineno, "expected three integers \"src dst t\"");
    if (s.find_first_not_of(" \t") != std::string_view::npos)
      throw ParseError(lineno, "trailing characters after \"src dst t\"");
    if (r.t < 0) throw ParseError(lineno, "negative timestamp");
    raw.push_back(r);
  }
  st.lines = lineno;
  return TemporalGraph::from_edges(std::move(raw), &st);
}

TemporalGraph load_graph_file(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in, stats);
}

}  // namespace tmotif
