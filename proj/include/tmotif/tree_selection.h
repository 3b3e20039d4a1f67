#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tmotif/preprocessor.h"
#include "tmotif/spanning_tree.h"

namespace tmotif {

inline constexpr std::size_t kDefaultTreeCandidates = 5;

struct TreeCandidate {
  std::size_t index;  // position in enumerate_rooted_spanning_trees order
  int looseness;
  std::optional<long double> weight;  // set for finalists
};

struct TreeSelection {
  std::size_t index;
  SpanningTree tree;
  long double weight;
  /// All candidates ranked by looseness; the first n_c carry their weight.
  std::vector<TreeCandidate> ranking;
};

/// Two-stage choice: keep the n_c rooted trees with the smallest looseness
/// (ties by enumeration order), then return the finalist with the smallest
/// total tree-match weight on g.
TreeSelection select_spanning_tree(const Motif& motif, const TemporalGraph& g, std::size_t n_c,
                                   const PreprocessOptions& options = {});

}  // namespace tmotif
