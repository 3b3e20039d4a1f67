#pragma once

#include <cstdint>

#include "tmotif/motif.h"
#include "tmotif/temporal_graph.h"

namespace tmotif {

/// Exact number of motif matches by chronological backtracking over motif
/// edges in order. Root edges are split across `workers` threads.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t exact_count(const Motif& motif, const TemporalGraph& g, unsigned workers = 1);

}  // namespace tmotif
