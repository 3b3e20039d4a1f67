#include "tmotif/exact.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tmotif {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exact count exceeds 64 bits");
  return r;
}

class Backtracker {
 public:
  Backtracker(const Motif& motif, const TemporalGraph& g)
      : motif_(motif), g_(g), vertex_of_(static_cast<std::size_t>(motif.num_vertices()), kNoVertex) {}

  std::uint64_t count_from(EdgeId root) {
    const TemporalEdge& e = g_.edge(root);
    const PatternEdge& p = motif_.edge(0);
    bound_ = e.t + motif_.delta();
    map(p, e.src, e.dst);
    const std::uint64_t n = motif_.num_edges() == 1 ? 1 : extend(1, e.t);
    unmap(p);
    return n;
  }

 private:
  bool used(VertexId v) const {
    return std::find(vertex_of_.begin(), vertex_of_.end(), v) != vertex_of_.end();
  }

  void map(const PatternEdge& p, VertexId u, VertexId v) {
    fresh_src_.push_back(vertex_of_[p.src] == kNoVertex);
    fresh_dst_.push_back(vertex_of_[p.dst] == kNoVertex);
    vertex_of_[p.src] = u;
    vertex_of_[p.dst] = v;
  }

  void unmap(const PatternEdge& p) {
    if (fresh_dst_.back()) vertex_of_[p.dst] = kNoVertex;
    if (fresh_src_.back()) vertex_of_[p.src] = kNoVertex;
    fresh_src_.pop_back();
    fresh_dst_.pop_back();
  }

  // Edges at or after motif position i, all later than `prev`.
  std::uint64_t extend(int i, Timestamp prev) {
    const PatternEdge& p = motif_.edge(i);
    const bool last = i + 1 == motif_.num_edges();
    const VertexId u = vertex_of_[p.src], v = vertex_of_[p.dst];
    const Timestamp lo = prev + 1, hi = bound_;
    if (lo > hi) return 0;
    std::uint64_t total = 0;

    if (u != kNoVertex && v != kNoVertex) {
      auto range = g_.pair_range(u, v, lo, hi);
      if (last) return range.size();
      for (const AdjEntry& a : range) total = checked_add(total, extend_with(i, p, u, v, a.t));
      return total;
    }

    if (u != kNoVertex || v != kNoVertex) {
      const VertexId anchor = u != kNoVertex ? u : v;
      const Direction dir = u != kNoVertex ? Direction::out : Direction::in;
      auto range = g_.temporal_range(anchor, dir, lo, hi);
      if (last) {
        std::uint64_t n = range.size();
        for (VertexId w : vertex_of_) {
          if (w == kNoVertex) continue;
          n -= dir == Direction::out ? g_.multiplicity(anchor, w, lo, hi) : g_.multiplicity(w, anchor, lo, hi);
        }
        return n;
      }
      for (const AdjEntry& a : range) {
        if (used(a.other)) continue;
        const VertexId s = dir == Direction::out ? anchor : a.other;
        const VertexId d = dir == Direction::out ? a.other : anchor;
        total = checked_add(total, extend_with(i, p, s, d, a.t));
      }
      return total;
    }

    auto [first, end] = g_.edge_range(lo, hi);
    for (EdgeId id = first; id < end; ++id) {
      const TemporalEdge& e = g_.edge(id);
      if (used(e.src) || used(e.dst)) continue;
      total = checked_add(total, last ? 1 : extend_with(i, p, e.src, e.dst, e.t));
    }
    return total;
  }

  std::uint64_t extend_with(int i, const PatternEdge& p, VertexId s, VertexId d, Timestamp t) {
    map(p, s, d);
    const std::uint64_t n = extend(i + 1, t);
    unmap(p);
    return n;
  }

  const Motif& motif_;
  const TemporalGraph& g_;
  std::vector<VertexId> vertex_of_;
  std::vector<bool> fresh_src_, fresh_dst_;
  Timestamp bound_ = 0;
};

}  // namespace

std::uint64_t exact_count(const Motif& motif, const TemporalGraph& g, unsigned workers) {
  const EdgeId m = static_cast<EdgeId>(g.num_edges());
  if (m == 0) return 0;
  workers = std::clamp<unsigned>(workers, 1, m);

  constexpr EdgeId kBlock = 256;
  std::atomic<EdgeId> next{0};
  std::vector<std::uint64_t> sums(workers, 0);
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&](unsigned id) {
    Backtracker bt(motif, g);
    try {
      for (EdgeId b; (b = next.fetch_add(kBlock)) < m;)
        for (EdgeId e = b; e < std::min<EdgeId>(m, b + kBlock); ++e)
          sums[id] = checked_add(sums[id], bt.count_from(e));
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(m);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  if (failure) std::rethrow_exception(failure);
  std::uint64_t total = 0;
  for (std::uint64_t s : sums) total = checked_add(total, s);
  return total;
}

}  // namespace tmotif
