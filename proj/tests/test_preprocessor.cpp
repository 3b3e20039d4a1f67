#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "support/fixtures.h"
#include "support/synthetic.h"
#include "tmotif/brute_force.h"
#include "tmotif/preprocessor.h"

using namespace tmotif;
using namespace tmotif::testing;

TEST_CASE("window partition") {
  TemporalGraph g = g0();
  WindowPartition p = partition_windows(g, 10);
  REQUIRE(p.size() == 2);
  CHECK(p[0].interval == TimeInterval{0, 20});
  CHECK(p[1].interval == TimeInterval{10, 30});
  CHECK(p[0].size() == 6);
  CHECK(p[1].size() == 3);
  // e2 sits at t = 10, inside both windows.
  CHECK(p[0].contains_edge(kE2));
  CHECK(p[1].contains_edge(kE2));
  CHECK_FALSE(p[1].contains_edge(kE1));

  CHECK(partition_windows(g, 25).size() == 1);
  CHECK(partition_windows(g, 20).size() == 1);
  CHECK(partition_windows(g, 7).size() == 3);  // ceil(20 / 7)

  WindowPartition flat = partition_windows(g, 10, false);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].interval == TimeInterval{0, 20});
  CHECK(flat[0].size() == 6);
}

TEST_CASE("partition invariants") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 50; ++round) {
    TemporalGraph g = random_small_graph(rng, 10, 150, 500);
    if (g.empty()) continue;
    const Timestamp delta = std::uniform_int_distribution<Timestamp>(1, 120)(rng);
    WindowPartition p = partition_windows(g, delta);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      CHECK(p[i].interval.hi - p[i + 1].interval.lo == delta);
      CHECK(p[i].interval.hi - p[i].interval.lo == 2 * delta);
    }
    CHECK(p[p.size() - 1].interval.hi >= g.t_max());
    for (const auto& e : g.edges()) {
      std::size_t n = 0;
      for (const auto& w : p.windows()) {
        CHECK(w.contains_edge(e.id) == w.interval.contains(e.t));
        n += w.contains_edge(e.id);
      }
      CHECK(n >= 1);
      // Closed windows share their endpoints, so a multiple of delta can sit in three.
      CHECK(n <= (e.t % delta == 0 ? 3u : 2u));
    }
    // Any span of at most delta fits in some window, and the count agrees
    // with a direct scan.
    std::uniform_int_distribution<Timestamp> time(0, g.t_max());
    for (int q = 0; q < 50; ++q) {
      const Timestamp lo = time(rng);
      const Timestamp hi = std::min(g.t_max(), lo + std::uniform_int_distribution<Timestamp>(0, delta)(rng));
      std::size_t n = 0;
      for (const auto& w : p.windows()) n += w.interval.contains(lo) && w.interval.contains(hi);
      CHECK(n >= 1);
      if (hi > lo) CHECK(n <= 2);
      CHECK(p.windows_containing(lo, hi) == n);
    }
  }
}

TEST_CASE("path tree weights on g0") {
  TemporalGraph g = g0();
  Motif m = path2(10);
  SpanningTree tree(m, {0, 1}, 1);
  WeightTable table = preprocess(tree, m, g);
  REQUIRE(table.num_windows() == 2);

  const WindowWeights& w0 = table.window(0);
  CHECK_FALSE(w0.floating);
  // Center weights in edge-id order e0 e5 e1 e2 e3 e4.
  CHECK(w0.exact[1] == std::vector<std::uint64_t>{0, 0, 1, 1, 2, 1});
  CHECK(w0.total == 5);
  CHECK(w0.center_prefix == std::vector<std::uint64_t>{0, 0, 1, 2, 4, 5});
  CHECK(table.window(1).total == 2);
  CHECK(table.total() == 7);
  CHECK(table.exact_total());
  CHECK((table.total_exact() == 7));
  CHECK_FALSE(table.any_floating());
  CHECK(table.window_prefix() == std::vector<double>{5, 7});
  // Leaves are not stored.
  CHECK_FALSE(w0.stored(0));
  CHECK(w0.stored(1));
  CHECK(tree_weight<std::uint64_t>(w0, table.partition()[0], tree, 0, kE3) == 1);
  CHECK(tree_weight<std::uint64_t>(w0, table.partition()[0], tree, 1, kE3) == 2);
}

TEST_CASE("single-edge tree weighs window membership") {
  TemporalGraph g = g0();
  Motif m = motif_from({{0, 1}}, 10);
  SpanningTree tree(m, {0}, 0);
  WeightTable table = preprocess(tree, m, g);
  CHECK(table.window(0).total == 6);
  CHECK(table.window(1).total == 3);
  CHECK(table.total() == 9);

  TemporalGraph one = TemporalGraph::from_edges({{5, 9, 100}});
  CHECK(preprocess(tree, m, one).total() == 1);
}

TEST_CASE("empty windows weigh nothing") {
  TemporalGraph g = TemporalGraph::from_edges({{1, 2, 0}, {2, 3, 1}, {1, 2, 100}, {2, 3, 101}});
  Motif m = path2(10);
  WeightTable table = preprocess(SpanningTree(m, {0, 1}, 0), m, g);
  // ceil(101 / 10) windows; the last two both hold t = 100 and 101.
  REQUIRE(table.num_windows() == 11);
  CHECK(table.window(0).total == 1);
  for (std::size_t i = 1; i < 9; ++i) CHECK(table.window(i).total == 0);
  CHECK(table.window(9).total == 1);
  CHECK(table.window(10).total == 1);
  CHECK(table.total() == 3);
}

TEST_CASE("window weights agree with partial-match enumeration") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    TemporalGraph g = random_small_graph(rng, 7, 150, 100);
    if (g.empty()) continue;
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    Motif m = random_motif(rng, k, k - 1 + std::uniform_int_distribution<int>(0, 2)(rng),
                           std::uniform_int_distribution<Timestamp>(1, 40)(rng));
    auto trees = enumerate_rooted_spanning_trees(m);
    const SpanningTree& tree = trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)];
    for (bool c2 : {true, false})
      for (bool c3 : {true, false}) {
        ConstraintSet cs{c2, c3};
        WeightTable table = preprocess(tree, m, g, {cs, 1});
        for (std::size_t i = 0; i < table.num_windows(); ++i) {
          const auto& win = table.partition()[i];
          CHECK(table.window(i).total ==
                oracle::brute_force_partial_matches(tree, m, g, win, cs));
        }
      }
  }
}

TEST_CASE("weights never shrink as delta grows on a fixed window") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 30; ++round) {
    TemporalGraph g = random_small_graph(rng, 6, 120, 80);
    if (g.empty()) continue;
    Motif small = random_motif(rng, 4, 4, 5);
    Motif large = small.with_delta(5 + std::uniform_int_distribution<Timestamp>(1, 30)(rng));
    auto trees = enumerate_rooted_spanning_trees(small);
    const auto& ts = trees[round % trees.size()];
    SpanningTree tl(large, ts.edges(), ts.center());
    Window window;
    window.interval = {0, g.t_max()};
    window.begin = 0;
    window.end = static_cast<EdgeId>(g.num_edges());
    WindowWeights a = preprocess_subgraph(ts, small, g, window);
    WindowWeights b = preprocess_subgraph(tl, large, g, window);
    for (int s : ts.edges()) {
      if (!a.stored(s)) continue;
      for (std::size_t e = 0; e < a.exact[s].size(); ++e) CHECK(a.exact[s][e] <= b.exact[s][e]);
    }
    CHECK(a.total <= b.total);
  }
}

TEST_CASE("storage and work bounds") {
  SyntheticParams params;
  params.vertices = 300;
  params.edges = 4000;
  params.span = 100'000;
  params.seed = 5;
  TemporalGraph g = synthetic_graph(params);
  Motif m = path5(500);
  std::size_t d_max = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    d_max = std::max({d_max, g.adjacency(v, Direction::out).size(), g.adjacency(v, Direction::in).size()});
  for (const auto& tree : enumerate_rooted_spanning_trees(m)) {
    WeightTable table = preprocess(tree, m, g);
    const std::size_t l = tree.edges().size();
    CHECK(table.entries() <= 2 * g.num_edges() * l);
    CHECK(table.stats().candidate_scans <= 2 * l * l * g.num_edges() * d_max);
  }
}

TEST_CASE("overflowing weights fall back to floating point") {
  // A hub with 2000 simultaneous out-edges. Each center has 1999^5 leaf
  // choices, which fits, but the window total of ~6.4e19 does not.
  std::vector<RawEdge> raw;
  for (int i = 0; i < 2000; ++i) raw.push_back({0, i + 1, 0});
  TemporalGraph g = TemporalGraph::from_edges(raw);
  Motif m = motif_from({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}, 100);
  SpanningTree tree(m, {0, 1, 2, 3, 4, 5}, 0);
  WeightTable table = preprocess(tree, m, g);
  CHECK(table.any_floating());
  CHECK_FALSE(table.exact_total());
  CHECK(table.window(0).floating);
  CHECK(table.total() > 1e19L);
  // Every other hub edge is a candidate for each leaf.
  const auto& approx = table.window(0).approx[0];
  REQUIRE(approx.size() == 2000);
  CHECK(approx[0] == doctest::Approx(std::pow(1999.0, 5)).epsilon(1e-9));
}
