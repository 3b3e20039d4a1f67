#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tmotif/counter.h"
#include "tmotif/motif.h"
#include "tmotif/preprocessor.h"
#include "tmotif/spanning_tree.h"
#include "tmotif/temporal_graph.h"
#include "tmotif/tree_selection.h"

namespace tmotif {

struct EstimateConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t candidates = kDefaultTreeCandidates;
  /// Index into enumerate_rooted_spanning_trees order; skips selection.
  std::optional<std::size_t> tree_index;
  unsigned runs = 1;
  ConstraintSet constraints;

  void check() const;
};

/// Samples per independently seeded chunk. Chunks are the unit of work
/// distribution, so results do not depend on the worker count.
inline constexpr std::uint64_t kChunkSamples = 1u << 14;

struct SampleTally {
  std::uint64_t attempted = 0;
  /// Indexed by Violation.
  std::array<std::uint64_t, 4> outcomes{};
  /// Sum of kContributionScale * derived / n_phi over valid samples.
  unsigned __int128 cnt_scaled = 0;
  std::uint64_t max_derived = 0;

  std::uint64_t valid() const { return outcomes[0]; }
  std::uint64_t count(Violation v) const { return outcomes[static_cast<std::size_t>(v)]; }
  void add(const SampleOutcome& o);
  void merge(const SampleTally& other);
};

struct RunResult {
  std::uint64_t seed = 0;
  SampleTally tally;
  double estimate = 0.0;
};

/// Draws cfg.samples tree matches with seed `seed` and accumulates the
/// rescaled extension counts. The table total must be positive.
RunResult run_samples(const TemporalGraph& g, const Motif& motif, const SpanningTree& tree,
                      const WeightTable& table, std::uint64_t samples, std::uint64_t seed,
                      unsigned workers, const ConstraintSet& constraints = {});

/// (cnt_scaled / kContributionScale) / samples * W, converted to a real once.
double rescale(unsigned __int128 cnt_scaled, std::uint64_t samples, const WeightTable& table);

struct PhaseTimings {
  double select = 0.0;
  double preprocess = 0.0;
  double sample = 0.0;
};

struct EstimateReport {
  std::size_t tree_index = 0;
  std::optional<SpanningTree> tree;
  int looseness = 0;
  long double W = 0;
  bool W_exact = true;
  unsigned __int128 W_int = 0;
  std::vector<long double> W_windows;
  bool floating_weights = false;
  bool no_tree_matches = false;

  double estimate = 0.0;
  /// Across runs; zero with a single run.
  double stddev = 0.0;
  std::vector<RunResult> runs;
  SampleTally total;  // all runs combined
  PhaseTimings timings;

  std::optional<double> valid_rate() const;
  std::optional<double> violation_rate(Violation v) const;
};

EstimateReport estimate(const Motif& motif, const TemporalGraph& g, const EstimateConfig& cfg);

/// ceil(3B / eps^2 * W / C * ln(2 / gamma)), advisory only.
std::uint64_t advise_samples(double B, double eps, double gamma, long double W, long double C_guess);

}  // namespace tmotif
