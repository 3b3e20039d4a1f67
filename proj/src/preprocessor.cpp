#include "tmotif/preprocessor.h"

#include <algorithm>
#include <atomic>
#include <thread>

namespace tmotif {

std::size_t WindowPartition::windows_containing(Timestamp lo, Timestamp hi) const {
  if (windows_.empty() || lo > hi) return 0;
  std::size_t first = 0, last = windows_.size();
  if (windows_.size() > 1) {
    // Window i starts at i*delta, so only i in [ceil(hi/delta) - 2, floor(lo/delta)] qualify.
    const Timestamp lo_idx = (hi + delta_ - 1) / delta_ - 2;
    const Timestamp hi_idx = lo / delta_;
    first = static_cast<std::size_t>(std::max<Timestamp>(0, lo_idx));
    last = static_cast<std::size_t>(std::min<Timestamp>(static_cast<Timestamp>(windows_.size()) - 1, hi_idx) + 1);
  }
  std::size_t count = 0;
  for (std::size_t i = first; i < last; ++i)
    if (windows_[i].interval.contains(lo) && windows_[i].interval.contains(hi)) ++count;
  return count;
}

WindowPartition partition_windows(const TemporalGraph& g, Timestamp delta, bool sliding_windows) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  std::vector<Window> windows;
  auto make = [&](Timestamp lo, Timestamp hi) {
    auto [b, e] = g.edge_range(lo, hi);
    windows.push_back(Window{TimeInterval{lo, hi}, b, e});
  };
  if (!sliding_windows) {
    make(0, g.t_max());
  } else {
    const Timestamp span = g.t_max() - g.t_min();
    const Timestamp q = std::max<Timestamp>(1, (span + delta - 1) / delta);
    for (Timestamp i = 0; i < q; ++i) make(i * delta, (i + 2) * delta);
  }
  return WindowPartition(delta, std::move(windows));
}

namespace {

inline bool add_into(std::uint64_t& acc, std::uint64_t v) { return __builtin_add_overflow(acc, v, &acc); }
inline bool mul_into(std::uint64_t& acc, std::uint64_t v) { return __builtin_mul_overflow(acc, v, &acc); }
inline bool add_into(double& acc, double v) { acc += v; return false; }
inline bool mul_into(double& acc, double v) { acc *= v; return false; }

// Returns false on integer overflow.
template <class T>
bool compute_window(const SpanningTree& tree, const Motif& motif, const TemporalGraph& g,
                    const Window& window, const ConstraintSet& constraints,
                    PreprocessStats& stats, std::vector<std::vector<T>>& weights, T& total) {
  const Timestamp delta = motif.delta();
  const std::size_t n = window.size();
  const int center = tree.center();
  weights.assign(static_cast<std::size_t>(tree.num_motif_edges()), {});
  total = 0;

  if (tree.tree_height() == 0) {
    weights[center].assign(n, T(1));
    total = static_cast<T>(n);
    return true;
  }

  const auto& levels = tree.levels();
  for (std::size_t h = 1; h < levels.size(); ++h) {
    for (int s : levels[h]) {
      auto& ws = weights[s];
      ws.assign(n, T(0));
      const auto& deps = tree.dependencies(s);
      for (std::size_t i = 0; i < n; ++i) {
        const TemporalEdge& e = g.edge(window.begin + static_cast<EdgeId>(i));
        T w = 1;
        for (const Dependency& d : deps) {
          CandidateRange r = g.candidate_range(e, d.anchor, d.alpha, d.beta, delta, window.interval,
                                               constraints.distinct_endpoints);
          ++stats.list_lookups;
          T sum = 0;
          if (tree.is_leaf(d.child)) {
            sum = static_cast<T>(g.candidate_count(r));
          } else {
            const auto& wc = weights[d.child];
            stats.candidate_scans += r.entries.size();
            for (const AdjEntry& a : r.entries)
              if (r.admits(a) && add_into(sum, wc[a.id - window.begin])) return false;
          }
          if (sum == T(0)) {
            w = 0;
            break;
          }
          if (mul_into(w, sum)) return false;
        }
        ws[i] = w;
        if (s == center && add_into(total, w)) return false;
      }
    }
  }
  return true;
}

template <class T>
std::vector<T> prefix_of(const std::vector<T>& v) {
  std::vector<T> p(v.size());
  T acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = acc += v[i];
  return p;
}

void drop_leaf_rows(const SpanningTree& tree, auto& weights) {
  for (int s : tree.edges())
    if (tree.is_leaf(s) && s != tree.center()) weights[s].clear();
}

}  // namespace

WindowWeights preprocess_subgraph(const SpanningTree& tree, const Motif& motif,
                                  const TemporalGraph& g, const Window& window,
                                  const ConstraintSet& constraints, PreprocessStats* stats) {
  PreprocessStats local;
  PreprocessStats& st = stats ? *stats : local;
  WindowWeights out;
  if (compute_window<std::uint64_t>(tree, motif, g, window, constraints, st, out.exact, out.total)) {
    drop_leaf_rows(tree, out.exact);
    out.center_prefix = prefix_of(out.exact[tree.center()]);
    return out;
  }
  out = WindowWeights{};
  out.floating = true;
  compute_window<double>(tree, motif, g, window, constraints, st, out.approx, out.total_f);
  drop_leaf_rows(tree, out.approx);
  out.center_prefix_f = prefix_of(out.approx[tree.center()]);
  out.total_f = out.center_prefix_f.empty() ? 0.0 : out.center_prefix_f.back();
  out.exact.assign(out.approx.size(), {});
  return out;
}

WeightTable::WeightTable(WindowPartition partition, std::vector<WindowWeights> windows,
                         PreprocessStats stats)
    : partition_(std::move(partition)), windows_(std::move(windows)), stats_(stats) {
  double running = 0.0;
  window_prefix_.reserve(windows_.size());
  for (const auto& w : windows_) {
    if (w.floating) {
      any_floating_ = true;
      exact_total_ = false;
      total_ += static_cast<long double>(w.total_f);
    } else {
      total_exact_ += w.total;
      total_ += static_cast<long double>(w.total);
    }
    running += w.total_as_double();
    window_prefix_.push_back(running);
  }
  if (exact_total_) total_ = static_cast<long double>(total_exact_);
}

std::size_t WeightTable::entries() const {
  std::size_t n = 0;
  for (const auto& w : windows_) {
    for (const auto& row : w.exact) n += row.size();
    for (const auto& row : w.approx) n += row.size();
  }
  return n;
}

WeightTable preprocess(const SpanningTree& tree, const Motif& motif, const TemporalGraph& g,
                       const PreprocessOptions& options) {
  WindowPartition partition =
      partition_windows(g, motif.delta(), options.constraints.sliding_windows);
  const std::size_t q = partition.size();
  std::vector<WindowWeights> windows(q);
  std::vector<PreprocessStats> stats(q);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(q)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < q;)
      windows[i] = preprocess_subgraph(tree, motif, g, partition[i], options.constraints, &stats[i]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  PreprocessStats total;
  for (const auto& s : stats) {
    total.candidate_scans += s.candidate_scans;
    total.list_lookups += s.list_lookups;
  }
  return WeightTable(std::move(partition), std::move(windows), total);
}

std::string to_string(const unsigned __int128& value) {
  if (value == 0) return "0";
  std::string s;
  for (unsigned __int128 v = value; v > 0; v /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace tmotif
