#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tmotif/motif.h"
#include "tmotif/preprocessor.h"
#include "tmotif/spanning_tree.h"
#include "tmotif/temporal_graph.h"

namespace tmotif {

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` of `seed`. Equal arguments give
/// equal streams on every run.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

/// A sampled match of a spanning tree. Indexed by motif edge / motif vertex;
/// non-tree edges hold kNoEdge.
struct PartialMatch {
  std::vector<EdgeId> edge_of;
  std::vector<VertexId> vertex_of;
  std::size_t window = 0;
};

class SamplerFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checks the structural properties every sampled tree match must satisfy:
/// endpoints agree with the vertex map, adjacent edges share exactly one
/// vertex (when distinct endpoints are enforced), children lie within delta of
/// their parent on the side of their time order, and all timestamps lie in the
/// sampling window.
bool satisfies_tree_constraints(const PartialMatch& pm, const SpanningTree& tree, const Motif& motif,
                                const TemporalGraph& g, const Window& window,
                                const ConstraintSet& constraints = {});

/// Draws tree matches with probability proportional to their weight.
/// Immutable after construction; randomness comes from the caller's Rng.
class Sampler {
 public:
  Sampler(const TemporalGraph& g, const Motif& motif, const SpanningTree& tree,
          const WeightTable& table, ConstraintSet constraints = {});

  /// Window i with probability W_i / W. Requires W > 0.
  std::size_t sample_window(Rng& rng) const;

  /// Tree match drawn inside window i (which must have W_i > 0): the center
  /// edge with probability w/W_i, then each child proportionally to its
  /// weight among its candidate list, top-down.
  PartialMatch sample_partial_match(std::size_t window, Rng& rng) const;
  void sample_into(std::size_t window, Rng& rng, PartialMatch& out) const;

  const WeightTable& table() const { return table_; }

 private:
  template <class T>
  void descend(std::size_t window, Rng& rng, PartialMatch& out) const;

  const TemporalGraph& g_;
  const Motif& motif_;
  const SpanningTree& tree_;
  const WeightTable& table_;
  ConstraintSet constraints_;
  // Integer prefix sums of window totals when the grand total fits in 64 bits.
  std::vector<std::uint64_t> window_prefix_exact_;
};

}  // namespace tmotif
