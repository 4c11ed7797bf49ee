#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlab/tlab.hpp"

using namespace tlab;

namespace {

// u=0, w=1, v=2 with uw:{2}, wv:{1,3}
temporal_graph path_example() {
  static_graph g(3, {{0, 1}, {1, 2}});
  labeling l;
  l.add(make_edge(0, 1), 2);
  l.add(make_edge(1, 2), {1, 3});
  return temporal_graph(g, l);
}

// a=0, b=1, c=2, d=3; ab, cd at 1 and bc, da at 2
temporal_graph c4_example() {
  static_graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  labeling l;
  l.add(make_edge(0, 1), 1);
  l.add(make_edge(2, 3), 1);
  l.add(make_edge(1, 2), 2);
  l.add(make_edge(0, 3), 2);
  return temporal_graph(g, l);
}

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  static_graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), validation_error);
  EXPECT_THROW(g.add_edge(2, 2), validation_error);
  EXPECT_THROW(g.add_edge(0, 3), validation_error);
  EXPECT_FALSE(g.add_edge_if_absent(1, 0));
  EXPECT_TRUE(g.add_edge_if_absent(1, 2));
  EXPECT_EQ(g.edge_count(), 2U);

  directed_graph d(2);
  d.add_edge(0, 1);
  d.add_edge(1, 0);  // antiparallel arcs are distinct
  EXPECT_THROW(d.add_edge(0, 1), validation_error);
  EXPECT_EQ(d.edge_count(), 2U);
}

TEST(Labeling, SortedDuplicateFreeAndMeasures) {
  labeling l;
  EXPECT_EQ(l.age(), 0);
  EXPECT_EQ(l.size(), 0U);
  l.add(make_edge(0, 1), 3);
  l.add(make_edge(0, 1), 1);
  l.add(make_edge(0, 1), 1);  // set semantics
  EXPECT_THROW(l.add(make_edge(0, 1), 0), validation_error);
  EXPECT_EQ(l.labels_of(make_edge(0, 1)), (std::vector<time_label>{1, 3}));
  EXPECT_EQ(l.size(), 2U);
  EXPECT_EQ(l.age(), 3);
  EXPECT_TRUE(l.remove(make_edge(0, 1), 3));
  EXPECT_FALSE(l.remove(make_edge(0, 1), 3));
  EXPECT_EQ(l.age(), 1);
}

TEST(TemporalGraph, RejectsLabelsOnNonEdges) {
  static_graph g(3, {{0, 1}});
  labeling l;
  l.add(make_edge(1, 2), 1);
  EXPECT_THROW(temporal_graph(g, l), validation_error);
}

TEST(Foremost, PathExampleFromEitherEnd) {
  auto tg = path_example();
  auto r = foremost_arrivals(tg, 0);
  EXPECT_EQ(r.arrival[0], 0);
  EXPECT_EQ(r.arrival[1], 2);
  EXPECT_EQ(r.arrival[2], 3);
  auto s = foremost_arrivals(tg, 2);
  EXPECT_EQ(s.arrival[2], 0);
  EXPECT_EQ(s.arrival[1], 1);
  EXPECT_EQ(s.arrival[0], 2);
}

TEST(Foremost, EmptyLabelingReachesNothing) {
  temporal_graph tg(static_graph(2, {{0, 1}}), labeling{});
  auto r = foremost_arrivals(tg, 0);
  EXPECT_FALSE(r.reached(1));
  EXPECT_THROW(foremost_arrivals(tg, 2), validation_error);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_temporally_connected(c4_example()));
  labeling k2;
  k2.add(make_edge(0, 1), 1);
  EXPECT_TRUE(is_temporally_connected(temporal_graph(static_graph(2, {{0, 1}}), k2)));
  labeling equal;
  equal.add(make_edge(0, 1), 1);
  equal.add(make_edge(1, 2), 1);
  EXPECT_FALSE(is_temporally_connected(temporal_graph(static_graph(3, {{0, 1}, {1, 2}}), equal)));
}

TEST(Connectivity, TerminalSets) {
  auto tg = c4_example();
  EXPECT_TRUE(is_r_connected(tg, {}));
  EXPECT_TRUE(is_r_connected(tg, {3}));
  EXPECT_TRUE(is_r_connected(tg, {0, 2}));
  labeling l;
  l.add(make_edge(0, 1), 1);
  l.add(make_edge(1, 2), 2);
  temporal_graph p(static_graph(3, {{0, 1}, {1, 2}}), l);
  EXPECT_FALSE(is_r_connected(p, {0, 2}));
  EXPECT_THROW(is_r_connected(p, {0, 5}), validation_error);
}

TEST(Diameter, SmallGraphs) {
  EXPECT_EQ(diameter(static_graph(2, {{0, 1}})), 1U);
  EXPECT_EQ(diameter(cycle_graph(6)), 3U);
  EXPECT_EQ(diameter(cycle_graph(5)), 2U);
  EXPECT_THROW(diameter(static_graph(3, {{0, 1}})), disconnected_error);
}

TEST(FindC4, CycleTreeAndComplete) {
  EXPECT_EQ(find_c4(cycle_graph(4)), (four_cycle{0, 1, 2, 3}));
  EXPECT_FALSE(find_c4(oracle::path_graph(5)).has_value());
  static_graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_FALSE(find_c4(star).has_value());
  auto k4 = oracle::complete_graph(4);
  auto all = oracle::all_c4_tuples(k4);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(find_c4(k4), all.front());
}

TEST(FindC4, MatchesEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_connected_graph(2 + trial % 6, 0.3, rng);
    auto all = oracle::all_c4_tuples(g);
    auto got = find_c4(g);
    ASSERT_EQ(got.has_value(), !all.empty());
    if (got) {
      EXPECT_EQ(*got, all.front());
    }
    std::set<four_cycle> sets;
    for (auto t : all) {
      std::sort(t.begin(), t.end());
      sets.insert(t);
    }
    auto listed = c4_vertex_sets(g);
    EXPECT_EQ(std::set<four_cycle>(listed.begin(), listed.end()), sets);
    EXPECT_EQ(listed.size(), sets.size());
  }
}

TEST(Verify, ReportFields) {
  auto tg = c4_example();
  auto all = all_vertices(4);
  auto rep = verify(tg, all, 2, 4);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.r_connected);
  EXPECT_EQ(rep.age, 2);
  EXPECT_EQ(rep.label_count, 4U);
  EXPECT_FALSE(verify(tg, all, 2, 3).budget_ok);
  EXPECT_FALSE(verify(tg, all, 1, 4).age_ok);
  EXPECT_FALSE(verify(tg, all, 1, 4).ok());
}

TEST(ReachProperty, ScanEqualsPathEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_connected_graph(2 + trial % 4, 0.5, rng);
    temporal_graph tg(g, oracle::random_labeling(g, 3, 6, rng));
    for (vertex s = 0; s < g.vertex_count(); ++s) {
      auto scan = foremost_arrivals(tg, s);
      auto brute = oracle::path_arrivals(tg, s);
      ASSERT_EQ(scan.arrival, brute) << "trial " << trial << " source " << s;
    }
  }
}

TEST(ReachProperty, DirectedScanEqualsPathEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    directed_graph d(n);
    std::bernoulli_distribution coin(0.45);
    for (vertex a = 0; a < n; ++a)
      for (vertex b = 0; b < n; ++b)
        if (a != b && coin(rng)) d.add_edge(a, b);
    labeling l;
    std::uniform_int_distribution<time_label> when(1, 5);
    for (const edge& a : d.arcs()) {
      for (int i = 0; i < trial % 3 + 1; ++i) {
        time_label t = when(rng);
        if (!l.contains(a, t)) l.add(a, t);
      }
    }
    directed_temporal_graph tg(d, l);
    for (vertex s = 0; s < n; ++s) {
      ASSERT_EQ(foremost_arrivals(tg, s).arrival, oracle::path_arrivals(tg, s));
    }
  }
}

TEST(ReachProperty, AddingALabelIsMonotone) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_connected_graph(2 + trial % 5, 0.4, rng);
    auto l = oracle::random_labeling(g, 2, 6, rng);
    temporal_graph before(g, l);
    std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
    std::uniform_int_distribution<time_label> when(1, 6);
    edge e = g.edges()[pick(rng)];
    time_label t = when(rng);
    if (!l.contains(e, t)) l.add(e, t);
    temporal_graph after(g, l);
    for (vertex s = 0; s < g.vertex_count(); ++s) {
      auto a = foremost_arrivals(before, s);
      auto b = foremost_arrivals(after, s);
      for (vertex v = 0; v < g.vertex_count(); ++v) {
        if (a.reached(v)) {
          ASSERT_TRUE(b.reached(v));
          ASSERT_LE(*b.arrival[v], *a.arrival[v]);
        }
      }
    }
  }
}

TEST(ReachProperty, WitnessPathsAreValidAndForemost) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_connected_graph(2 + trial % 6, 0.4, rng);
    temporal_graph tg(g, oracle::random_labeling(g, 3, 8, rng));
    for (vertex s = 0; s < g.vertex_count(); ++s) {
      auto r = foremost_arrivals(tg, s);
      for (vertex v = 0; v < g.vertex_count(); ++v) {
        auto p = witness_path(r, v);
        ASSERT_EQ(p.has_value(), r.reached(v));
        if (!p) continue;
        ASSERT_TRUE(is_valid_temporal_path(tg, *p));
        if (v == s) {
          EXPECT_TRUE(p->empty());
          continue;
        }
        ASSERT_FALSE(p->empty());
        EXPECT_EQ(p->front().from, s);
        EXPECT_EQ(p->back().to, v);
        EXPECT_EQ(p->back().time, *r.arrival[v]);
        EXPECT_TRUE(tg.labels().contains(make_edge(p->back().from, v), *r.arrival[v]));
      }
    }
  }
}

TEST(TemporalPath, InvalidPathsAreRejected) {
  auto tg = path_example();
  EXPECT_TRUE(is_valid_temporal_path(tg, {{0, 1, 2}, {1, 2, 3}}));
  EXPECT_FALSE(is_valid_temporal_path(tg, {{2, 1, 1}, {1, 2, 3}}));  // revisits 2
  EXPECT_FALSE(is_valid_temporal_path(tg, {{0, 1, 2}, {1, 2, 1}}));  // time decreases
  EXPECT_FALSE(is_valid_temporal_path(tg, {{0, 1, 1}}));             // not a label
  EXPECT_FALSE(is_valid_temporal_path(tg, {{0, 2, 1}}));             // not an edge
}
