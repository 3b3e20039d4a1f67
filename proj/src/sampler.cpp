#include "tmotif/sampler.h"

#include <algorithm>
#include <cassert>
#include <limits>

namespace tmotif {

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

bool satisfies_tree_constraints(const PartialMatch& pm, const SpanningTree& tree, const Motif& motif,
                                const TemporalGraph& g, const Window& window,
                                const ConstraintSet& constraints) {
  const Timestamp delta = motif.delta();
  for (int s : tree.edges()) {
    if (pm.edge_of[s] == kNoEdge || pm.edge_of[s] >= g.num_edges()) return false;
    const TemporalEdge& e = g.edge(pm.edge_of[s]);
    const PatternEdge& p = motif.edge(s);
    if (pm.vertex_of[p.src] != e.src || pm.vertex_of[p.dst] != e.dst) return false;
    if (!window.interval.contains(e.t)) return false;
    for (const Dependency& d : tree.dependencies(s)) {
      const TemporalEdge& c = g.edge(pm.edge_of[d.child]);
      int shared = (c.src == e.src || c.src == e.dst) + (c.dst == e.src || c.dst == e.dst);
      if (shared == 0 || (constraints.distinct_endpoints && shared != 1)) return false;
      const bool in_range = d.beta == Order::before ? (e.t - delta <= c.t && c.t <= e.t)
                                                    : (e.t <= c.t && c.t <= e.t + delta);
      if (!in_range) return false;
    }
  }
  return true;
}

Sampler::Sampler(const TemporalGraph& g, const Motif& motif, const SpanningTree& tree,
                 const WeightTable& table, ConstraintSet constraints)
    : g_(g), motif_(motif), tree_(tree), table_(table), constraints_(constraints) {
  if (table_.exact_total() && table_.total_exact() <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < table_.num_windows(); ++i)
      window_prefix_exact_.push_back(running += table_.window(i).total);
  }
}

std::size_t Sampler::sample_window(Rng& rng) const {
  const auto& prefix = table_.window_prefix();
  if (prefix.size() == 1) return 0;
  if (!window_prefix_exact_.empty()) {
    const std::uint64_t total = window_prefix_exact_.back();
    if (total == 0) throw SamplerFault("sampling with zero total weight");
    const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    auto it = std::upper_bound(window_prefix_exact_.begin(), window_prefix_exact_.end(), r);
    return static_cast<std::size_t>(it - window_prefix_exact_.begin());
  }
  std::uniform_real_distribution<double> pick(0.0, prefix.back());
  const double r = pick(rng);
  auto it = std::upper_bound(prefix.begin(), prefix.end(), r);
  if (it == prefix.end()) --it;
  // Skip back over trailing zero-weight windows that rounding could land on.
  while (it != prefix.begin() && table_.window(static_cast<std::size_t>(it - prefix.begin())).total_as_double() == 0.0)
    --it;
  return static_cast<std::size_t>(it - prefix.begin());
}

PartialMatch Sampler::sample_partial_match(std::size_t window, Rng& rng) const {
  PartialMatch pm;
  sample_into(window, rng, pm);
  return pm;
}

void Sampler::sample_into(std::size_t window, Rng& rng, PartialMatch& out) const {
  if (table_.window(window).floating)
    descend<double>(window, rng, out);
  else
    descend<std::uint64_t>(window, rng, out);
  assert(satisfies_tree_constraints(out, tree_, motif_, g_, table_.partition()[window], constraints_));
}

namespace {

template <class T>
T draw_below(T bound, Rng& rng) {
  if constexpr (std::is_integral_v<T>) {
    return std::uniform_int_distribution<T>(0, bound - 1)(rng);
  } else {
    return std::uniform_real_distribution<T>(0, bound)(rng);
  }
}

}  // namespace

template <class T>
void Sampler::descend(std::size_t window, Rng& rng, PartialMatch& out) const {
  const WindowWeights& ww = table_.window(window);
  const Window& win = table_.partition()[window];
  const std::vector<T>* center_prefix;
  if constexpr (std::is_integral_v<T>)
    center_prefix = &ww.center_prefix;
  else
    center_prefix = &ww.center_prefix_f;
  if (center_prefix->empty() || center_prefix->back() <= T(0))
    throw SamplerFault("sampling from a window with zero weight");

  out.edge_of.assign(static_cast<std::size_t>(motif_.num_edges()), kNoEdge);
  out.vertex_of.assign(static_cast<std::size_t>(motif_.num_vertices()), kNoVertex);
  out.window = window;

  auto assign = [&](int s, const TemporalEdge& e) {
    out.edge_of[s] = e.id;
    out.vertex_of[motif_.edge(s).src] = e.src;
    out.vertex_of[motif_.edge(s).dst] = e.dst;
  };

  {
    const T r = draw_below(center_prefix->back(), rng);
    auto it = std::upper_bound(center_prefix->begin(), center_prefix->end(), r);
    if (it == center_prefix->end()) --it;
    assign(tree_.center(), g_.edge(win.begin + static_cast<EdgeId>(it - center_prefix->begin())));
  }

  const Timestamp delta = motif_.delta();
  for (int s : tree_.descent_order()) {
    const TemporalEdge& parent = g_.edge(out.edge_of[s]);
    for (const Dependency& d : tree_.dependencies(s)) {
      CandidateRange range = g_.candidate_range(parent, d.anchor, d.alpha, d.beta, delta,
                                                win.interval, constraints_.distinct_endpoints);
      EdgeId chosen = kNoEdge;
      if (tree_.is_leaf(d.child)) {
        const std::size_t count = g_.candidate_count(range);
        if (count == 0) throw SamplerFault("empty candidate list below a positive weight");
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
        for (const AdjEntry& a : range.entries) {
          if (!range.admits(a)) continue;
          if (j-- == 0) {
            chosen = a.id;
            break;
          }
        }
      } else {
        const auto& wc = [&]() -> const std::vector<T>& {
          if constexpr (std::is_integral_v<T>) return ww.exact[d.child];
          else return ww.approx[d.child];
        }();
        T total = 0;
        for (const AdjEntry& a : range.entries)
          if (range.admits(a)) total += wc[a.id - win.begin];
        if (total <= T(0)) throw SamplerFault("empty candidate list below a positive weight");
        T r = draw_below(total, rng);
        EdgeId last_positive = kNoEdge;
        for (const AdjEntry& a : range.entries) {
          if (!range.admits(a)) continue;
          const T w = wc[a.id - win.begin];
          if (w <= T(0)) continue;
          last_positive = a.id;
          if (r < w) {
            chosen = a.id;
            break;
          }
          r -= w;
        }
        if (chosen == kNoEdge) chosen = last_positive;  // floating-point round-off
      }
      assign(d.child, g_.edge(chosen));
    }
  }
}

}  // namespace tmotif
