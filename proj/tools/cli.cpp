#include "cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tmotif/exact.h"
#include "tmotif/motif.h"
#include "tmotif/preprocessor.h"
#include "tmotif/temporal_graph.h"

namespace tmotif::cli {

using nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TemporalGraph read_graph(const std::string& path) {
  try {
    return load_graph_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Motif read_motif(const std::string& path, Timestamp delta) {
  try {
    return load_motif_file(path, delta);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

ordered_json number(long double v, bool exact, unsigned __int128 exact_value) {
  if (exact && exact_value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(exact_value);
  return static_cast<double>(v);
}

ordered_json rate(std::optional<double> r) { return r ? ordered_json(*r) : ordered_json(nullptr); }

ordered_json empty_report(const char* mode) {
  ordered_json j;
  j["mode"] = mode;
  j["estimate"] = nullptr;
  j["count"] = nullptr;
  j["W"] = nullptr;
  j["valid_rate"] = nullptr;
  j["invalid"] = {{"vertex_map", nullptr}, {"delta_interval", nullptr}, {"edge_order", nullptr}};
  j["tree"] = nullptr;
  j["timings"] = ordered_json::object();
  j["seed"] = nullptr;
  return j;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

std::string cell(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fixed(v.get<double>(), 8);
  return v.dump();
}

bool blank(const ordered_json& v) {
  if (v.is_null()) return true;
  if (!v.is_object()) return false;
  return std::all_of(v.begin(), v.end(), [](const ordered_json& x) { return x.is_null(); });
}

void print_table(const ordered_json& report, std::ostream& out) {
  std::size_t width = 0;
  for (auto& [k, v] : report.items()) width = std::max(width, k.size());
  for (auto& [k, v] : report.items()) {
    if (blank(v)) continue;
    out << std::left << std::setw(static_cast<int>(width) + 2) << k;
    if (v.is_object()) {
      bool first = true;
      for (auto& [kk, vv] : v.items()) {
        out << (first ? "" : "  ") << kk << "=" << cell(vv);
        first = false;
      }
      out << '\n';
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << '\n';
      for (const auto& row : v) {
        out << "  ";
        bool first = true;
        for (auto& [kk, vv] : row.items()) {
          out << (first ? "" : "  ") << kk << "=" << cell(vv);
          first = false;
        }
        out << '\n';
      }
    } else {
      out << cell(v) << '\n';
    }
  }
}

void emit(ordered_json report, const std::string& format, bool timings, std::ostream& out) {
  if (!timings) report["timings"] = nullptr;
  if (format == "table")
    print_table(report, out);
  else
    out << report.dump(2) << '\n';
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ordered_json tree_json(const SpanningTree& tree, std::size_t index) {
  return {{"index", index},
          {"center", tree.center()},
          {"edges", tree.edges()},
          {"looseness", tree.looseness()},
          {"height", tree.tree_height()}};
}

ordered_json estimate_json(const EstimateReport& r, const EstimateConfig& cfg, bool dump_weights) {
  ordered_json j = empty_report("estimate");
  j["estimate"] = r.estimate;
  j["W"] = number(r.W, r.W_exact, r.W_int);
  j["valid_rate"] = rate(r.valid_rate());
  j["invalid"] = {{"vertex_map", rate(r.violation_rate(Violation::vertex_map))},
                  {"delta_interval", rate(r.violation_rate(Violation::delta_interval))},
                  {"edge_order", rate(r.violation_rate(Violation::edge_order))}};
  if (r.tree) j["tree"] = tree_json(*r.tree, r.tree_index);
  j["timings"] = {{"select", r.timings.select},
                  {"preprocess", r.timings.preprocess},
                  {"sample", r.timings.sample}};
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["threads"] = cfg.workers;
  j["windows"] = r.W_windows.size();
  j["no_tree_matches"] = r.no_tree_matches;
  j["floating_weights"] = r.floating_weights;
  j["max_derive_count"] = r.total.max_derived;
  if (cfg.runs > 1) {
    j["stddev"] = r.stddev;
    ordered_json runs = ordered_json::array();
    for (const auto& run : r.runs)
      runs.push_back({{"seed", run.seed},
                      {"estimate", run.estimate},
                      {"valid", run.tally.valid()},
                      {"cnt_scaled", to_string(run.tally.cnt_scaled)}});
    j["runs"] = std::move(runs);
  } else if (!r.runs.empty()) {
    j["cnt_scaled"] = to_string(r.runs.front().tally.cnt_scaled);
  }
  if (dump_weights) {
    ordered_json w = ordered_json::array();
    for (long double x : r.W_windows) w.push_back(static_cast<double>(x));
    j["W_windows"] = std::move(w);
  }
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal motif counting by spanning-tree sampling", "tmotif"};
  app.require_subcommand(1);

  std::string graph_path, motif_path, format = "json";
  Timestamp delta = 0;
  unsigned threads = default_threads();
  EstimateConfig cfg;
  std::size_t tree_index = 0;
  bool dump_weights = false, no_timings = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--no-timings", no_timings, "Report null timings, for byte-comparable output");
  };

  auto* est = app.add_subcommand("estimate", "Estimate the motif count by sampling");
  est->add_option("--graph", graph_path, "Edge list: src dst t per line")->required();
  est->add_option("--motif", motif_path, "Motif edges: x y per line, in time order")->required();
  est->add_option("--delta", delta, "Time window")->required();
  est->add_option("--samples", cfg.samples, "Number of samples")->required();
  est->add_option("--seed", cfg.seed, "Random seed");
  est->add_option("--threads", threads, "Worker threads");
  est->add_option("--candidates", cfg.candidates, "Finalists in tree selection");
  auto* tree_opt = est->add_option("--tree", tree_index, "Use this rooted tree (index from `trees`)");
  est->add_option("--runs", cfg.runs, "Independent runs, seeded seed, seed+1, ...");
  est->add_flag("--dump-weights", dump_weights, "Include per-window weights");
  add_format(est);

  auto* ex = app.add_subcommand("exact", "Count motif matches exactly");
  ex->add_option("--graph", graph_path)->required();
  ex->add_option("--motif", motif_path)->required();
  ex->add_option("--delta", delta)->required();
  ex->add_option("--threads", threads);
  add_format(ex);

  auto* tr = app.add_subcommand("trees", "List rooted spanning trees of a motif");
  tr->add_option("--motif", motif_path)->required();
  auto* tr_graph = tr->add_option("--graph", graph_path, "Also compute each tree's total weight");
  auto* tr_delta = tr->add_option("--delta", delta);
  tr_graph->needs(tr_delta);
  tr_delta->needs(tr_graph);
  add_format(tr);

  std::vector<const char*> argv{"tmotif"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (threads == 0) throw UsageError("--threads must be at least 1");
    if (!tr->parsed() || !graph_path.empty()) {
      if (delta <= 0) throw UsageError("--delta must be positive");
    }

    if (est->parsed()) {
      if (cfg.samples == 0) throw UsageError("--samples must be at least 1");
      if (cfg.runs == 0) throw UsageError("--runs must be at least 1");
      if (cfg.candidates == 0) throw UsageError("--candidates must be at least 1");
      cfg.workers = threads;
      if (*tree_opt) cfg.tree_index = tree_index;
      const Motif motif = read_motif(motif_path, delta);
      const TemporalGraph g = read_graph(graph_path);
      if (cfg.tree_index && *cfg.tree_index >= enumerate_rooted_spanning_trees(motif).size())
        throw UsageError("--tree index out of range");
      emit(estimate_json(estimate(motif, g, cfg), cfg, dump_weights), format, !no_timings, out);
      return ok;
    }

    if (ex->parsed()) {
      const Motif motif = read_motif(motif_path, delta);
      const TemporalGraph g = read_graph(graph_path);
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t count = exact_count(motif, g, threads);
      ordered_json j = empty_report("exact");
      j["count"] = count;
      j["timings"] = {{"count", since(t0)}};
      j["threads"] = threads;
      emit(j, format, !no_timings, out);
      return ok;
    }

    // trees
    const bool weighted = !graph_path.empty();
    const Motif motif = read_motif(motif_path, weighted ? delta : 1);
    std::optional<TemporalGraph> g;
    if (weighted) g = read_graph(graph_path);
    ordered_json j = empty_report("trees");
    ordered_json list = ordered_json::array();
    const auto t0 = std::chrono::steady_clock::now();
    const auto all = enumerate_rooted_spanning_trees(motif);
    for (std::size_t i = 0; i < all.size(); ++i) {
      ordered_json t = tree_json(all[i], i);
      if (weighted) {
        const WeightTable table = preprocess(all[i], motif, *g, {{}, threads});
        t["W"] = number(table.total(), table.exact_total(), table.total_exact());
      }
      list.push_back(std::move(t));
    }
    j["timings"] = {{"preprocess", since(t0)}};
    j["trees"] = std::move(list);
    emit(j, format, !no_timings, out);
    return ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace tmotif::cli
