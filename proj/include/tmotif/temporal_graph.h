#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmotif {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Direction : std::uint8_t { out, in };
enum class PairDirection : std::uint8_t { forward, backward };
enum class Endpoint : std::uint8_t { src, dst };
enum class Order : std::uint8_t { before, after };

/// A directed edge (src -> dst) at time t. `id` is the edge's position in the
/// globally time-sorted edge list.
struct TemporalEdge {
  EdgeId id = kNoEdge;
  VertexId src = kNoVertex;
  VertexId dst = kNoVertex;
  Timestamp t = 0;

  VertexId endpoint(Endpoint which) const { return which == Endpoint::src ? src : dst; }
  VertexId opposite(Endpoint which) const { return which == Endpoint::src ? dst : src; }
  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// One slot of a per-vertex adjacency list, ordered by (t, id).
struct AdjEntry {
  Timestamp t;
  VertexId other;
  EdgeId id;
};

/// Closed interval [lo, hi].
struct TimeInterval {
  Timestamp lo = 0;
  Timestamp hi = 0;

  bool contains(Timestamp t) const { return lo <= t && t <= hi; }
  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

struct RawEdge {
  std::int64_t src;
  std::int64_t dst;
  Timestamp t;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Candidate edges for a tree-edge extension: a contiguous slice of an
/// adjacency list, minus entries whose far endpoint is `excluded` and minus
/// the query edge itself.
struct CandidateRange {
  std::span<const AdjEntry> entries;
  VertexId excluded = kNoVertex;
  EdgeId self = kNoEdge;
  VertexId vertex = kNoVertex;  // the anchor vertex the entries belong to
  Direction alpha = Direction::out;
  Timestamp lo = 0;
  Timestamp hi = -1;

  bool admits(const AdjEntry& a) const { return a.other != excluded && a.id != self; }

  template <class F>
  void for_each(F&& f) const {
    for (const AdjEntry& a : entries)
      if (admits(a)) f(a);
  }
};

/// Immutable timestamp-sorted directed multigraph. Vertex ids are dense
/// (0..n-1, assigned in ascending order of the original ids) and timestamps
/// are shifted so the earliest edge is at time 0.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Builds a graph from raw edges: drops self-loops and duplicate tuples,
  /// remaps vertices, shifts time and sorts.
  static TemporalGraph from_edges(std::vector<RawEdge> raw, LoadStats* stats = nullptr);

  std::size_t num_vertices() const { return original_ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::span<const TemporalEdge> edges() const { return edges_; }
  const TemporalEdge& edge(EdgeId id) const { return edges_[id]; }

  Timestamp t_min() const { return 0; }
  Timestamp t_max() const { return edges_.empty() ? 0 : edges_.back().t; }
  /// Original timestamp of the earliest edge (the amount subtracted at load).
  Timestamp time_offset() const { return time_offset_; }

  std::int64_t original_id(VertexId v) const { return original_ids_[v]; }
  std::optional<VertexId> find_vertex(std::int64_t original) const;

  std::span<const AdjEntry> adjacency(VertexId v, Direction dir) const;

  /// Adjacency slice of v in direction dir with timestamps in [lo, hi].
  std::span<const AdjEntry> temporal_range(VertexId v, Direction dir, Timestamp lo,
                                           Timestamp hi) const;
  std::vector<TemporalEdge> temporal_list(VertexId v, Direction dir, Timestamp lo,
                                          Timestamp hi) const;

  /// Edges u -> v with timestamps in [lo, hi]; `other` in each entry is v.
  std::span<const AdjEntry> pair_range(VertexId u, VertexId v, Timestamp lo, Timestamp hi) const;
  std::vector<TemporalEdge> multiedge_list(VertexId u, VertexId v, PairDirection dir,
                                           Timestamp lo, Timestamp hi) const;
  std::size_t multiplicity(VertexId u, VertexId v, Timestamp lo, Timestamp hi) const;

  /// Global edge-id range [first, last) of edges with timestamps in [lo, hi].
  std::pair<EdgeId, EdgeId> edge_range(Timestamp lo, Timestamp hi) const;

  /// Edges incident on the `anchor` endpoint u of e in direction alpha, within
  /// delta of t(e) on the side given by beta, clipped to `window`. Edges whose
  /// far endpoint is e's other endpoint are excluded when `exclude_shared` is
  /// set; e itself is always excluded.
  CandidateRange candidate_range(const TemporalEdge& e, Endpoint anchor, Direction alpha,
                                 Order beta, Timestamp delta, TimeInterval window,
                                 bool exclude_shared = true) const;
  /// Number of admitted entries of r, by binary search rather than a scan.
  std::size_t candidate_count(const CandidateRange& r) const;
  std::vector<TemporalEdge> candidate_list(const TemporalEdge& e, Endpoint anchor,
                                           Direction alpha, Order beta, Timestamp delta,
                                           TimeInterval window, bool exclude_shared = true) const;

 private:
  std::vector<TemporalEdge> edges_;
  std::vector<Timestamp> times_;  // times_[id] == edges_[id].t
  std::vector<std::int64_t> original_ids_;
  Timestamp time_offset_ = 0;

  // CSR adjacency sorted by (t, id).
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<AdjEntry> out_adj_, in_adj_;
  // Out-adjacency sorted by (other, t, id) for pair lookups.
  std::vector<AdjEntry> pair_adj_;

  std::vector<TemporalEdge> materialize(std::span<const AdjEntry> range) const;
};

/// Reads "src dst t" lines; '#' lines and blank lines are ignored.
TemporalGraph load_graph(std::istream& in, LoadStats* stats = nullptr);
TemporalGraph load_graph_file(const std::string& path, LoadStats* stats = nullptr);

}  // namespace tmotif
