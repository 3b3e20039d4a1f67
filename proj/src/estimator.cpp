#include "tmotif/estimator.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tmotif/sampler.h"

namespace tmotif {

void EstimateConfig::check() const {
  if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  if (runs == 0) throw std::invalid_argument("run count must be at least 1");
  if (candidates == 0) throw std::invalid_argument("candidate count must be at least 1");
}

void SampleTally::add(const SampleOutcome& o) {
  ++attempted;
  ++outcomes[static_cast<std::size_t>(o.violation)];
  if (o.valid()) {
    cnt_scaled += o.scaled();
    max_derived = std::max(max_derived, o.derived);
  }
}

void SampleTally::merge(const SampleTally& other) {
  attempted += other.attempted;
  for (std::size_t i = 0; i < outcomes.size(); ++i) outcomes[i] += other.outcomes[i];
  cnt_scaled += other.cnt_scaled;
  max_derived = std::max(max_derived, other.max_derived);
}

double rescale(unsigned __int128 cnt_scaled, std::uint64_t samples, const WeightTable& table) {
  const long double W = table.exact_total() ? static_cast<long double>(table.total_exact()) : table.total();
  return static_cast<double>(static_cast<long double>(cnt_scaled) / kContributionScale /
                             static_cast<long double>(samples) * W);
}

namespace {

void sample_chunk(const Sampler& sampler, const TemporalGraph& g, const Motif& motif,
                  const SpanningTree& tree, const WeightTable& table, std::uint64_t seed,
                  std::uint64_t chunk, std::uint64_t count, SampleTally& tally,
                  std::vector<std::uint32_t>& slots, PartialMatch& pm) {
  Rng rng = make_stream(seed, chunk);
  slots.resize(count);
  for (auto& s : slots) s = static_cast<std::uint32_t>(sampler.sample_window(rng));
  std::sort(slots.begin(), slots.end());
  for (std::uint32_t w : slots) {
    sampler.sample_into(w, rng, pm);
    tally.add(validate_and_derive(motif, tree, pm, g, table.partition()));
  }
}

}  // namespace

RunResult run_samples(const TemporalGraph& g, const Motif& motif, const SpanningTree& tree,
                      const WeightTable& table, std::uint64_t samples, std::uint64_t seed,
                      unsigned workers, const ConstraintSet& constraints) {
  if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
  if (!(table.total() > 0)) throw std::invalid_argument("sampling needs a positive total weight");
  Sampler sampler(g, motif, tree, table, constraints);
  const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, chunks));

  std::atomic<std::uint64_t> next{0};
  std::vector<SampleTally> tallies(workers);
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&](unsigned id) {
    std::vector<std::uint32_t> slots;
    PartialMatch pm;
    try {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
        const std::uint64_t count = std::min(kChunkSamples, samples - c * kChunkSamples);
        sample_chunk(sampler, g, motif, tree, table, seed, c, count, tallies[id], slots, pm);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  if (failure) std::rethrow_exception(failure);

  RunResult result;
  result.seed = seed;
  for (const auto& t : tallies) result.tally.merge(t);
  result.estimate = rescale(result.tally.cnt_scaled, samples, table);
  return result;
}

std::optional<double> EstimateReport::valid_rate() const {
  if (total.attempted == 0) return std::nullopt;
  return static_cast<double>(total.valid()) / static_cast<double>(total.attempted);
}

std::optional<double> EstimateReport::violation_rate(Violation v) const {
  if (total.attempted == 0) return std::nullopt;
  return static_cast<double>(total.count(v)) / static_cast<double>(total.attempted);
}

EstimateReport estimate(const Motif& motif, const TemporalGraph& g, const EstimateConfig& cfg) {
  cfg.check();
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };
  const PreprocessOptions options{cfg.constraints, cfg.workers};
  EstimateReport report;

  auto t0 = clock::now();
  std::optional<WeightTable> table;
  if (cfg.tree_index) {
    std::vector<SpanningTree> all = enumerate_rooted_spanning_trees(motif);
    if (*cfg.tree_index >= all.size())
      throw std::out_of_range("tree index " + std::to_string(*cfg.tree_index) + " out of range (" +
                              std::to_string(all.size()) + " trees)");
    report.tree_index = *cfg.tree_index;
    report.tree = all[*cfg.tree_index];
  } else {
    TreeSelection sel = select_spanning_tree(motif, g, cfg.candidates, options);
    report.tree_index = sel.index;
    report.tree = std::move(sel.tree);
  }
  report.looseness = report.tree->looseness();
  auto t1 = clock::now();
  // Selection already preprocessed the winner, but keeping its table would
  // hold every finalist's weights in memory at once.
  table = preprocess(*report.tree, motif, g, options);
  auto t2 = clock::now();
  report.timings.select = seconds(t0, t1);
  report.timings.preprocess = seconds(t1, t2);

  report.W = table->total();
  report.W_exact = table->exact_total();
  report.W_int = table->total_exact();
  report.floating_weights = table->any_floating();
  for (std::size_t i = 0; i < table->num_windows(); ++i)
    report.W_windows.push_back(table->window(i).floating
                                   ? static_cast<long double>(table->window(i).total_f)
                                   : static_cast<long double>(table->window(i).total));

  if (!(report.W > 0)) {
    report.no_tree_matches = true;
    return report;
  }

  double sum = 0.0;
  for (unsigned r = 0; r < cfg.runs; ++r) {
    RunResult run = run_samples(g, motif, *report.tree, *table, cfg.samples, cfg.seed + r,
                                cfg.workers, cfg.constraints);
    report.total.merge(run.tally);
    sum += run.estimate;
    report.runs.push_back(run);
  }
  report.timings.sample = seconds(t2, clock::now());
  report.estimate = sum / cfg.runs;
  if (cfg.runs > 1) {
    double ss = 0.0;
    for (const auto& run : report.runs) ss += (run.estimate - report.estimate) * (run.estimate - report.estimate);
    report.stddev = std::sqrt(ss / (cfg.runs - 1));
  }
  return report;
}

std::uint64_t advise_samples(double B, double eps, double gamma, long double W, long double C_guess) {
  if (!(B > 0) || !(W > 0) || !(C_guess > 0)) throw std::invalid_argument("arguments must be positive");
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("eps must lie in (0, 1]");
  if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must lie in (0, 1)");
  const long double k = 3.0L * B / (static_cast<long double>(eps) * eps) * (W / C_guess) *
                        std::log(2.0L / gamma);
  // Absorb round-off so exact integer bounds are not pushed up by one.
  return static_cast<std::uint64_t>(std::ceil(k * (1.0L - 1e-12L)));
}

}  // namespace tmotif
