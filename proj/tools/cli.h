#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tmotif/estimator.h"

namespace tmotif::cli {

enum Exit : int { ok = 0, usage_error = 1, input_error = 2, internal_error = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json tree_json(const SpanningTree& tree, std::size_t index);
nlohmann::ordered_json estimate_json(const EstimateReport& report, const EstimateConfig& cfg,
                                     bool dump_weights);

}  // namespace tmotif::cli
