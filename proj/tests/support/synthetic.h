#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tmotif/motif.h"
#include "tmotif/temporal_graph.h"

namespace tmotif::testing {

/// The six-edge reference graph: (1,2,10) (2,3,15) (2,3,20) (3,1,25)
/// (3,4,30) (1,3,12). Loaded times are shifted by -10.
TemporalGraph g0();
std::vector<RawEdge> g0_edges();

Motif path2(Timestamp delta);     // 0->1->2
Motif triangle(Timestamp delta);  // 0->1, 1->2, 2->0
Motif cycle4(Timestamp delta);
Motif clique4(Timestamp delta);
Motif path5(Timestamp delta);  // 5 vertices, 4 edges
Motif star5(Timestamp delta);  // hub 0, 4 out-edges
Motif motif_from(const std::vector<std::pair<int, int>>& edges, Timestamp delta);

/// Edges arrive in bursts among small groups of vertices; group members are
/// drawn with power-law popularity, so out-degrees are heavy-tailed.
struct SyntheticParams {
  std::size_t vertices = 1000;
  std::size_t edges = 5000;
  double exponent = 1.2;        // popularity ~ rank^-exponent
  Timestamp span = 1'000'000;   // burst centers uniform in [0, span]
  Timestamp burst_width = 200;  // edges of a burst within this many time units
  std::size_t group_min = 3, group_max = 5;
  std::size_t burst_min = 4, burst_max = 12;
  double background = 0.1;  // fraction of isolated random edges
  std::uint64_t seed = 1;
};

std::vector<RawEdge> synthetic_edges(const SyntheticParams& p);
TemporalGraph synthetic_graph(const SyntheticParams& p);

/// Small dense random instance: few vertices, many parallel edges.
TemporalGraph random_small_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                 Timestamp max_time);
/// Connected motif with the given vertex and edge counts (parallel edges allowed).
Motif random_motif(std::mt19937_64& rng, int vertices, int edges, Timestamp delta);

}  // namespace tmotif::testing
