#pragma once

#include <cstdint>
#include <vector>

#include "tmotif/motif.h"
#include "tmotif/spanning_tree.h"
#include "tmotif/temporal_graph.h"

namespace tmotif {

/// Relaxed constraints applied when sampling tree matches. Adjacent-edge
/// ordering within delta is always on; the flags toggle the other two.
struct ConstraintSet {
  /// Adjacent tree edges must not map onto the same vertex pair.
  bool distinct_endpoints = true;
  /// Partition time into overlapping 2*delta windows. When off, the whole
  /// graph is a single window.
  bool sliding_windows = true;
};

struct Window {
  TimeInterval interval;
  EdgeId begin = 0;  // global edge-id range [begin, end)
  EdgeId end = 0;

  std::size_t size() const { return end - begin; }
  bool contains_edge(EdgeId e) const { return begin <= e && e < end; }
};

class WindowPartition {
 public:
  WindowPartition() = default;
  WindowPartition(Timestamp delta, std::vector<Window> windows)
      : delta_(delta), windows_(std::move(windows)) {}

  Timestamp delta() const { return delta_; }
  std::size_t size() const { return windows_.size(); }
  const Window& operator[](std::size_t i) const { return windows_[i]; }
  const std::vector<Window>& windows() const { return windows_; }

  /// Number of windows whose interval contains all of [lo, hi].
  std::size_t windows_containing(Timestamp lo, Timestamp hi) const;

 private:
  Timestamp delta_ = 0;
  std::vector<Window> windows_;
};

/// Windows [i*delta, (i+2)*delta] for i = 0..q-1 with
/// q = max(1, ceil(t_max / delta)), or a single window [0, t_max] when
/// sliding windows are off.
WindowPartition partition_windows(const TemporalGraph& g, Timestamp delta,
                                  bool sliding_windows = true);

/// Tree-match weights of one window. weights[s][e - window.begin] counts the
/// partial matches of the subtree below tree edge s when s maps to edge e.
/// Only non-leaf tree edges and the center are stored; leaves weigh 1.
struct WindowWeights {
  bool floating = false;
  std::vector<std::vector<std::uint64_t>> exact;
  std::vector<std::vector<double>> approx;
  /// Inclusive prefix sums of the center weights, for O(log) center draws.
  std::vector<std::uint64_t> center_prefix;
  std::vector<double> center_prefix_f;
  std::uint64_t total = 0;
  double total_f = 0.0;

  double total_as_double() const { return floating ? total_f : static_cast<double>(total); }
  bool stored(int tree_edge) const {
    return floating ? !approx[tree_edge].empty() : !exact[tree_edge].empty();
  }
};

struct PreprocessStats {
  /// Candidate entries visited while evaluating weight products.
  std::uint64_t candidate_scans = 0;
  /// Binary-searched candidate lists.
  std::uint64_t list_lookups = 0;
};

struct PreprocessOptions {
  ConstraintSet constraints;
  unsigned workers = 1;
};

/// Runs the bottom-up weight recurrence for one window. Heights are
/// processed in ascending order; candidate lists are clipped to the window.
/// Integer arithmetic is checked; on overflow the window is recomputed with
/// double-precision weights and `floating` is set.
WindowWeights preprocess_subgraph(const SpanningTree& tree, const Motif& motif,
                                  const TemporalGraph& g, const Window& window,
                                  const ConstraintSet& constraints = {},
                                  PreprocessStats* stats = nullptr);

class WeightTable {
 public:
  WeightTable() = default;
  WeightTable(WindowPartition partition, std::vector<WindowWeights> windows, PreprocessStats stats);

  const WindowPartition& partition() const { return partition_; }
  const WindowWeights& window(std::size_t i) const { return windows_[i]; }
  std::size_t num_windows() const { return windows_.size(); }

  /// Grand total, exact whenever no window switched to floating point.
  long double total() const { return total_; }
  bool exact_total() const { return exact_total_; }
  unsigned __int128 total_exact() const { return total_exact_; }
  bool any_floating() const { return any_floating_; }
  const PreprocessStats& stats() const { return stats_; }
  /// Inclusive prefix sums of window totals (as doubles) for window draws.
  const std::vector<double>& window_prefix() const { return window_prefix_; }
  /// Stored weight entries across all windows.
  std::size_t entries() const;

 private:
  WindowPartition partition_;
  std::vector<WindowWeights> windows_;
  PreprocessStats stats_;
  long double total_ = 0;
  unsigned __int128 total_exact_ = 0;
  bool exact_total_ = true;
  bool any_floating_ = false;
  std::vector<double> window_prefix_;
};

WeightTable preprocess(const SpanningTree& tree, const Motif& motif, const TemporalGraph& g,
                       const PreprocessOptions& options = {});

/// Weight of graph edge e for tree edge s in window w (1 for leaves).
template <class T>
T tree_weight(const WindowWeights& w, const Window& window, const SpanningTree& tree, int s,
              EdgeId e);

template <>
inline std::uint64_t tree_weight<std::uint64_t>(const WindowWeights& w, const Window& window,
                                                const SpanningTree& tree, int s, EdgeId e) {
  return tree.is_leaf(s) && s != tree.center() ? 1 : w.exact[s][e - window.begin];
}

template <>
inline double tree_weight<double>(const WindowWeights& w, const Window& window,
                                  const SpanningTree& tree, int s, EdgeId e) {
  return tree.is_leaf(s) && s != tree.center() ? 1.0 : w.approx[s][e - window.begin];
}

std::string to_string(const unsigned __int128& value);

}  // namespace tmotif
