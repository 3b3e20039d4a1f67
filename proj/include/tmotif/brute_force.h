#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tmotif/motif.h"
#include "tmotif/preprocessor.h"
#include "tmotif/sampler.h"
#include "tmotif/spanning_tree.h"
#include "tmotif/temporal_graph.h"

// Slow reference implementations used to check the fast paths. They test
// the match definitions directly and share no search code with the library.
namespace tmotif::oracle {

inline constexpr std::size_t kMaxGraphEdges = 300;
inline constexpr int kMaxMotifEdges = 6;
inline constexpr std::size_t kMaxWindowEdges = 2000;

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every increasing edge-index combination, checked against the match
/// predicate: consistent injective vertex map, strictly increasing times in
/// motif order, span within delta.
std::uint64_t brute_force_count(const Motif& motif, const TemporalGraph& g);

/// Calls f with the edge of every motif edge, for every match.
void for_each_match(const Motif& motif, const TemporalGraph& g,
                    const std::function<void(const std::vector<EdgeId>&)>& f);

/// Calls f for every tree match inside `window`: each child is found by
/// scanning all window edges and testing endpoint agreement, the time side
/// relative to its parent, and (optionally) distinct far endpoints.
void for_each_partial_match(const SpanningTree& tree, const Motif& motif, const TemporalGraph& g,
                            const Window& window, const ConstraintSet& constraints,
                            const std::function<void(const PartialMatch&)>& f);

std::uint64_t brute_force_partial_matches(const SpanningTree& tree, const Motif& motif,
                                          const TemporalGraph& g, const Window& window,
                                          const ConstraintSet& constraints = {});

std::vector<PartialMatch> all_partial_matches(const SpanningTree& tree, const Motif& motif,
                                              const TemporalGraph& g, const Window& window,
                                              const ConstraintSet& constraints = {});

/// Literal list count: walks the full cross product.
std::uint64_t brute_force_list_count(const std::vector<std::vector<Timestamp>>& lists);

}  // namespace tmotif::oracle
