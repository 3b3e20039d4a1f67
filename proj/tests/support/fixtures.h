#pragma once

#include "tmotif/temporal_graph.h"

namespace tmotif::testing {

// Dense ids of g0's vertices 1..4 and its edges by their original names.
inline constexpr VertexId kV1 = 0, kV2 = 1, kV3 = 2, kV4 = 3;
inline constexpr EdgeId kE0 = 0, kE5 = 1, kE1 = 2, kE2 = 3, kE3 = 4, kE4 = 5;

}  // namespace tmotif::testing
