#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "support/fixtures.h"
#include "support/synthetic.h"
#include "tmotif/brute_force.h"
#include "tmotif/sampler.h"

using namespace tmotif;
using namespace tmotif::testing;

namespace {

// |observed - n p| within k standard errors.
bool within(std::uint64_t observed, std::uint64_t n, double p, double k = 5.0) {
  const double se = std::sqrt(n * p * (1 - p));
  return std::abs(static_cast<double>(observed) - n * p) <= k * se + 1e-9;
}

struct PathFixture {
  TemporalGraph g = g0();
  Motif m = path2(10);
  SpanningTree tree{m, {0, 1}, 1};
  WeightTable table = preprocess(tree, m, g);
  Sampler sampler{g, m, tree, table};
};

}  // namespace

TEST_CASE("window draws follow the window totals") {
  PathFixture f;
  Rng rng = make_stream(1, 0);
  const std::uint64_t n = 70'000;
  std::uint64_t second = 0;
  for (std::uint64_t i = 0; i < n; ++i) second += f.sampler.sample_window(rng) == 1;
  CHECK(within(second, n, 2.0 / 7.0));
}

TEST_CASE("single window and zero-weight windows") {
  TemporalGraph g = g0();
  Motif wide = path2(30);
  SpanningTree t1(wide, {0, 1}, 1);
  WeightTable one = preprocess(t1, wide, g);
  REQUIRE(one.num_windows() == 1);
  Sampler s1(g, wide, t1, one);
  Rng rng = make_stream(2, 0);
  for (int i = 0; i < 100; ++i) CHECK(s1.sample_window(rng) == 0);

  TemporalGraph gaps = TemporalGraph::from_edges({{1, 2, 0}, {2, 3, 1}, {1, 2, 100}, {2, 3, 101}});
  Motif m = path2(10);
  SpanningTree t(m, {0, 1}, 0);
  WeightTable table = preprocess(t, m, gaps);
  Sampler s(gaps, m, t, table);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t w = s.sample_window(rng);
    CHECK((w == 0 || w == 9 || w == 10));
  }
  CHECK_THROWS_AS(s.sample_partial_match(4, rng), SamplerFault);
}

TEST_CASE("in-window and overall match probabilities on g0") {
  PathFixture f;
  Rng rng = make_stream(3, 0);
  const std::uint64_t n = 50'000;
  std::uint64_t hit = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    PartialMatch pm = f.sampler.sample_partial_match(0, rng);
    hit += pm.edge_of[1] == kE3 && pm.edge_of[0] == kE1;
  }
  CHECK(within(hit, n, 1.0 / 5.0));

  // (e2, e3) sits in both windows: probability 2/7 overall.
  hit = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    PartialMatch pm = f.sampler.sample_partial_match(f.sampler.sample_window(rng), rng);
    hit += pm.edge_of[1] == kE3 && pm.edge_of[0] == kE2;
  }
  CHECK(within(hit, n, 2.0 / 7.0));
}

TEST_CASE("single-edge tree draws a uniform window edge") {
  TemporalGraph g = g0();
  Motif m = motif_from({{0, 1}}, 10);
  SpanningTree tree(m, {0}, 0);
  WeightTable table = preprocess(tree, m, g);
  Sampler s(g, m, tree, table);
  Rng rng = make_stream(4, 0);
  std::map<EdgeId, std::uint64_t> freq;
  const std::uint64_t n = 30'000;
  for (std::uint64_t i = 0; i < n; ++i) ++freq[s.sample_partial_match(0, rng).edge_of[0]];
  CHECK(freq.size() == 6);
  for (auto [e, c] : freq) CHECK(within(c, n, 1.0 / 6.0));
}

TEST_CASE("draws satisfy the tree constraints and only produce enumerated matches") {
  std::mt19937_64 gen(17);
  for (int round = 0; round < 25; ++round) {
    TemporalGraph g = random_small_graph(gen, 6, 150, 60);
    if (g.empty()) continue;
    const int k = std::uniform_int_distribution<int>(2, 5)(gen);
    Motif m = random_motif(gen, k, k, std::uniform_int_distribution<Timestamp>(2, 20)(gen));
    auto trees = enumerate_rooted_spanning_trees(m);
    const auto& tree = trees[gen() % trees.size()];
    ConstraintSet cs{gen() % 2 == 0, gen() % 2 == 0};
    WeightTable table = preprocess(tree, m, g, {cs, 1});
    if (!(table.total() > 0)) continue;
    Sampler s(g, m, tree, table, cs);
    std::vector<std::set<std::vector<EdgeId>>> known(table.num_windows());
    for (std::size_t i = 0; i < table.num_windows(); ++i)
      oracle::for_each_partial_match(tree, m, g, table.partition()[i], cs,
                                     [&](const PartialMatch& pm) { known[i].insert(pm.edge_of); });
    Rng rng = make_stream(round, 0);
    for (int i = 0; i < 300; ++i) {
      const std::size_t w = s.sample_window(rng);
      CHECK(table.window(w).total > 0);
      PartialMatch pm = s.sample_partial_match(w, rng);
      CHECK(pm.window == w);
      CHECK(satisfies_tree_constraints(pm, tree, m, g, table.partition()[w], cs));
      CHECK(known[w].count(pm.edge_of) == 1);
    }
  }
}

TEST_CASE("streams are reproducible") {
  PathFixture f;
  auto draw = [&](std::uint64_t seed, std::uint64_t stream) {
    Rng rng = make_stream(seed, stream);
    std::vector<EdgeId> out;
    for (int i = 0; i < 200; ++i) {
      PartialMatch pm = f.sampler.sample_partial_match(f.sampler.sample_window(rng), rng);
      out.push_back(pm.edge_of[0]);
      out.push_back(pm.edge_of[1]);
    }
    return out;
  };
  CHECK(draw(9, 0) == draw(9, 0));
  CHECK(draw(9, 1) == draw(9, 1));
  CHECK(draw(9, 0) != draw(9, 1));
  CHECK(draw(9, 0) != draw(10, 0));
}
