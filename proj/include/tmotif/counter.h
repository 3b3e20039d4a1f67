#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tmotif/motif.h"
#include "tmotif/preprocessor.h"
#include "tmotif/sampler.h"
#include "tmotif/spanning_tree.h"
#include "tmotif/temporal_graph.h"

namespace tmotif {

enum class Violation : std::uint8_t { none, vertex_map, delta_interval, edge_order };

std::string_view to_string(Violation v);

/// Full-motif checks on a sampled tree match, in order: injective vertex map,
/// timestamp span within delta, tree-edge timestamps strictly increasing in
/// motif order. Returns the first failure.
Violation validate(const PartialMatch& pm, const Motif& motif, const SpanningTree& tree,
                   const TemporalGraph& g);

/// Number of partition windows containing every given timestamp.
std::size_t compute_n_phi(std::span<const Timestamp> timestamps, const WindowPartition& partition);
std::size_t compute_n_phi(const PartialMatch& pm, const SpanningTree& tree, const TemporalGraph& g,
                          const WindowPartition& partition);

/// Number of tuples taking one element from each list with strictly
/// increasing timestamps across consecutive lists. Lists must be sorted.
/// Linear in the total list length; throws std::overflow_error past 2^64.
std::uint64_t list_count(std::span<const std::vector<Timestamp>> lists);

/// Exact number of motif matches extending a validated tree match: each
/// non-tree edge draws from the multi-edges between its mapped endpoints,
/// bounded by the neighbouring tree-edge timestamps in motif order and by the
/// delta window.
std::uint64_t derive_count(const Motif& motif, const SpanningTree& tree, const PartialMatch& pm,
                           const TemporalGraph& g);

/// Contributions are accumulated as integers scaled by this factor. n_phi is
/// 1 or 2 for any tree match spanning positive time; a zero-span match sitting
/// exactly on a window boundary lies in 3 closed windows.
inline constexpr std::uint32_t kContributionScale = 6;

/// derived / n_phi, zero when the sample is invalid.
struct SampleOutcome {
  Violation violation = Violation::none;
  std::uint64_t derived = 0;
  std::uint32_t n_phi = 1;

  bool valid() const { return violation == Violation::none; }
  unsigned __int128 scaled() const {
    return valid() ? (unsigned __int128)derived * (kContributionScale / n_phi) : 0;
  }
  double value() const { return valid() ? static_cast<double>(derived) / n_phi : 0.0; }
};

SampleOutcome validate_and_derive(const Motif& motif, const SpanningTree& tree,
                                  const PartialMatch& pm, const TemporalGraph& g,
                                  const WindowPartition& partition);

}  // namespace tmotif
