#include "tmotif/tree_selection.h"

#include <algorithm>
#include <stdexcept>

namespace tmotif {

TreeSelection select_spanning_tree(const Motif& motif, const TemporalGraph& g, std::size_t n_c,
                                   const PreprocessOptions& options) {
  if (n_c == 0) throw std::invalid_argument("n_c must be at least 1");
  std::vector<SpanningTree> all = enumerate_rooted_spanning_trees(motif);

  std::vector<TreeCandidate> ranking;
  ranking.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) ranking.push_back({i, all[i].looseness(), std::nullopt});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const TreeCandidate& a, const TreeCandidate& b) { return a.looseness < b.looseness; });

  const std::size_t finalists = std::min(n_c, ranking.size());
  std::size_t best = 0;
  for (std::size_t r = 0; r < finalists; ++r) {
    ranking[r].weight = preprocess(all[ranking[r].index], motif, g, options).total();
    if (*ranking[r].weight < *ranking[best].weight) best = r;
  }
  const std::size_t index = ranking[best].index;
  return TreeSelection{index, all[index], *ranking[best].weight, std::move(ranking)};
}

}  // namespace tmotif
