#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tlab/tlab.hpp"

using namespace tlab;

namespace {

xor3_formula triple_clause() { return {2, {{0, 1}, {0, 1}, {0, 1}}}; }

// Vertices of variable i's gadget: s, both base paths, every vertex of its
// three forks.
std::set<vertex> gadget_vertices(const mal_instance& inst, std::size_t i) {
  const mal_variable& v = inst.variables[i];
  std::set<vertex> out{v.s};
  out.insert(v.left.begin(), v.left.end());
  out.insert(v.right.begin(), v.right.end());
  for (std::size_t c : v.forks) {
    const mal_fork& f = inst.forks[c];
    out.insert(f.t);
    out.insert(f.p.begin(), f.p.end());
    out.insert(f.q.begin(), f.q.end());
  }
  return out;
}

std::size_t labels_inside(const labeling& l, const std::set<vertex>& vs) {
  std::size_t c = 0;
  for (const auto& [e, ts] : l) {
    if (vs.count(e.u) && vs.count(e.v)) c += ts.size();
  }
  return c;
}

truth_assignment random_assignment(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  truth_assignment tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[i] = coin(rng);
  return tau;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monotone XOR(3) -> MAL

TEST(Xor3, Validation) {
  EXPECT_NO_THROW(triple_clause().validate());
  EXPECT_THROW((xor3_formula{3, {{0, 1}, {1, 2}, {0, 2}}}).validate(), validation_error);
  EXPECT_THROW((xor3_formula{2, {{0, 1}, {0, 1}}}).validate(), validation_error);
  EXPECT_THROW((xor3_formula{2, {{0, 0}, {1, 1}, {0, 1}}}).validate(), validation_error);
  EXPECT_THROW((xor3_formula{4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 5}}}).validate(),
               validation_error);
}

TEST(Xor3, RandomFormulasAreValidAndSeeded) {
  for (std::size_t n : {2U, 4U, 6U, 8U}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto f = random_xor3_formula(n, seed);
      EXPECT_NO_THROW(f.validate());
      EXPECT_EQ(f.clauses, random_xor3_formula(n, seed).clauses);
    }
  }
  EXPECT_THROW(random_xor3_formula(3, 0), validation_error);
}

TEST(Xor3, SatisfiedClauses) {
  auto f = triple_clause();
  EXPECT_EQ(satisfied_clauses(f, {true, false}), 3U);
  EXPECT_EQ(satisfied_clauses(f, {true, true}), 0U);
  EXPECT_THROW(satisfied_clauses(f, {true}), validation_error);
}

TEST(MalInstance, GadgetSizes) {
  auto inst = build_mal_instance(triple_clause());
  // 11 base vertices per variable, 9 per physical fork (one per clause)
  EXPECT_EQ(inst.graph.vertex_count(), 2 * 11 + 3 * 9U);
  EXPECT_EQ(inst.age, 10);
  EXPECT_EQ(inst.gadget_index.at("s_0"), inst.variables[0].s);
  EXPECT_EQ(inst.gadget_index.at("ebar_1"), inst.variables[1].right[4]);
  EXPECT_EQ(inst.gadget_index.at("t_0^1"), inst.gadget_index.at("t_1^1"));
  // the first variable's left fork side is the second one's right side
  EXPECT_EQ(inst.gadget_index.at("f_0^2"), inst.gadget_index.at("fbar_1^2"));
  EXPECT_EQ(gadget_vertices(inst, 0).size(), 11 + 3 * 9U);
}

TEST(MalInstance, DiameterTenAndSToTDistances) {
  for (std::size_t n : {2U, 4U, 6U}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto inst = build_mal_instance(random_xor3_formula(n, seed));
      EXPECT_EQ(diameter(inst.graph), 10U) << "n=" << n << " seed=" << seed;
      for (std::size_t i = 0; i < n; ++i) {
        auto dist = bfs_distances(inst.graph, inst.variables[i].s);
        for (std::size_t c : inst.variables[i].forks) EXPECT_EQ(dist[inst.forks[c].t], 10U);
      }
    }
  }
}

TEST(MalInstance, BudgetFormula) {
  auto four = build_mal_instance(random_xor3_formula(4, 0));
  EXPECT_EQ(four.budget(6), 254U);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(four.budget(k) - four.budget(k + 1), 8U);
  auto two = build_mal_instance(triple_clause());
  EXPECT_EQ(two.budget(3), 101U);
  EXPECT_EQ(two.budget(0), 125U);
}

TEST(MalCertificate, TwoVariableCountsMatchBudget) {
  auto inst = build_mal_instance(triple_clause());
  auto sat = certificate_mal_labeling(inst, {true, false});
  auto unsat = certificate_mal_labeling(inst, {true, true});
  EXPECT_EQ(sat.size(), inst.budget(3));
  EXPECT_EQ(unsat.size(), inst.budget(0));
  EXPECT_EQ(unsat.size() - sat.size(), 24U);
  EXPECT_EQ(certificate_mal_labeling(inst, {false, true}).size(), inst.budget(3));
  EXPECT_EQ(certificate_mal_labeling(inst, {false, false}).size(), inst.budget(0));
  EXPECT_LE(sat.age(), 10);
  EXPECT_THROW(certificate_mal_labeling(inst, {true}), validation_error);
}

TEST(MalCertificate, SeventyFourLabelsPerGadget) {
  // With every clause satisfied the partner gadget's fork labels coincide
  // with this gadget's, so the labels inside one gadget are its own.
  auto inst = build_mal_instance(triple_clause());
  auto l = certificate_mal_labeling(inst, {true, false});
  EXPECT_EQ(labels_inside(l, gadget_vertices(inst, 0)), 74U);
  EXPECT_EQ(labels_inside(l, gadget_vertices(inst, 1)), 74U);
}

TEST(MalCertificate, GadgetPathsAreTemporalBothWays) {
  std::mt19937_64 rng(61);
  for (std::size_t n : {2U, 4U, 6U}) {
    auto inst = build_mal_instance(random_xor3_formula(n, n));
    auto tau = random_assignment(n, rng);
    temporal_graph tg(inst.graph, certificate_mal_labeling(inst, tau));
    EXPECT_LE(tg.age(), 10);
    for (std::size_t i = 0; i < n; ++i) {
      auto from_s = foremost_arrivals(tg, inst.variables[i].s);
      for (vertex v : gadget_vertices(inst, i)) EXPECT_TRUE(from_s.reached(v));
      for (std::size_t c : inst.variables[i].forks) {
        EXPECT_EQ(from_s.arrival[inst.forks[c].t], 10);
        EXPECT_TRUE(foremost_arrivals(tg, inst.forks[c].t).reached(inst.variables[i].s));
      }
    }
  }
}

TEST(MalCertificate, CountIdentityWithCoincidingBridges) {
  // For n >= 4 a variable outside a satisfied clause sends both of its bridges
  // for that clause to the same fork vertex, so 2(n-2) labels per satisfied
  // clause coincide with the other bridge's.
  std::mt19937_64 rng(62);
  for (std::size_t n : {4U, 6U}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto inst = build_mal_instance(random_xor3_formula(n, seed));
      auto tau = random_assignment(n, rng);
      const std::size_t k = satisfied_clauses(inst.formula, tau);
      EXPECT_EQ(certificate_mal_labeling(inst, tau).size(), inst.budget(k) - 2 * (n - 2) * k);
    }
  }
}

// ---------------------------------------------------------------------------
// Vertex Cover -> MSL

TEST(MslReduction, TriangleInstance) {
  auto inst = build_msl_instance(oracle::complete_graph(3), 2);
  EXPECT_EQ(inst.budget, 91U);
  EXPECT_EQ(inst.graph.vertex_count(), 86U);
  EXPECT_EQ(inst.terminals.size(), 4U);
  EXPECT_EQ(inst.terminals.front(), inst.n0);
  for (const auto& paths : inst.incidence_paths) {
    for (const auto& p : paths) EXPECT_EQ(p.size(), 6 * 2 + 2U);  // 6k+1 edges
  }
  for (const auto& p : inst.vertex_paths) EXPECT_EQ(p.size(), 4U);
  EXPECT_THROW(build_msl_instance(oracle::complete_graph(3), 0), validation_error);
}

TEST(MslReduction, CertificateOnTriangle) {
  auto inst = build_msl_instance(oracle::complete_graph(3), 2);
  for (std::vector<vertex> cover : {std::vector<vertex>{0, 1}, {0, 2}, {1, 2}}) {
    auto l = certificate_msl_labeling(inst, cover);
    auto rep = verify(temporal_graph(inst.graph, l), inst.terminals, std::nullopt, inst.budget);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.label_count, 91U);
    EXPECT_EQ(l.labels_of(make_edge(inst.n0, inst.n1)), (std::vector<time_label>{6 * 2 + 5}));
    // forwarding portion: everything up to l*
    std::size_t forwarding = 0;
    for (const auto& [e, ts] : l)
      for (time_label t : ts) forwarding += t <= 6 * 2 + 5;
    EXPECT_EQ(forwarding, 3 * 2 + 3 * (6 * 2 + 1) + 1U);
  }
}

TEST(MslReduction, RejectsBadCovers) {
  auto inst = build_msl_instance(oracle::complete_graph(3), 2);
  EXPECT_THROW(certificate_msl_labeling(inst, {0}), validation_error);
  EXPECT_THROW(certificate_msl_labeling(inst, {0, 0}), validation_error);
  EXPECT_THROW(certificate_msl_labeling(inst, {0, 7}), validation_error);
  auto p4 = build_msl_instance(oracle::path_graph(4), 2);
  EXPECT_THROW(certificate_msl_labeling(p4, {0, 3}), validation_error);  // misses {1,2}
}

TEST(MslReduction, SizesForPathAndCycle) {
  for (auto [g, k, cover] : {std::tuple{oracle::path_graph(4), std::size_t{2}, std::vector<vertex>{1, 2}},
                             std::tuple{cycle_graph(5), std::size_t{3}, std::vector<vertex>{0, 2, 3}}}) {
    auto inst = build_msl_instance(g, k);
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    EXPECT_EQ(inst.graph.vertex_count(), 3 * n + m * (12 * k + 1) + 2);
    EXPECT_EQ(inst.budget, 6 * k + 2 * m * (6 * k + 1) + 1);
    auto l = certificate_msl_labeling(inst, cover);
    auto rep = verify(temporal_graph(inst.graph, l), inst.terminals, std::nullopt, inst.budget);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.label_count, inst.budget);
  }
}

// ---------------------------------------------------------------------------
// Multicolored Clique -> MASL

TEST(MaslReduction, BudgetClosedForm) {
  EXPECT_EQ(masl_budget(2), 36U);
  EXPECT_EQ(masl_budget(3), 234U);
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::size_t k2 = k * k, k3 = k2 * k, k4 = k3 * k;
    // the closed form, evaluated in signed arithmetic
    const long long want = 6LL * k + 12LL * (k2 - k) + 3LL * (static_cast<long long>(k4) - 2 * k3 - k2 + 2 * k) +
                           12LL * (static_cast<long long>(k3) - 3 * k2 + 2 * k);
    EXPECT_EQ(static_cast<long long>(masl_budget(k)), want);
  }
}

TEST(MaslReduction, K2TwoColors) {
  auto inst = build_masl_instance(static_graph(2, {{0, 1}}), 2, {0, 1});
  EXPECT_EQ(inst.age, 12);
  EXPECT_EQ(inst.budget, 36U);
  EXPECT_EQ(inst.terminals.size(), 2 + 1U);
  auto l = certificate_masl_labeling(inst, {0, 1});
  auto rep = verify(temporal_graph(inst.graph, l), inst.terminals, inst.age, inst.budget);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.label_count, 36U);
  const auto& p = inst.color_paths[0];
  EXPECT_EQ(l.labels_of(make_edge(p[0], p[1])), (std::vector<time_label>{1, 12}));
  EXPECT_EQ(l.labels_of(make_edge(p[1], p[2])), (std::vector<time_label>{2, 11}));
  EXPECT_EQ(l.labels_of(make_edge(p[2], p[3])), (std::vector<time_label>{3, 10}));
}

TEST(MaslReduction, TriangleThreeColors) {
  auto inst = build_masl_instance(oracle::complete_graph(3), 3, {0, 1, 2});
  EXPECT_EQ(inst.terminals.size(), 3 + 3U);
  auto dist = all_pairs_distances(inst.graph);
  for (vertex a : inst.terminals)
    for (vertex b : inst.terminals)
      if (a != b) {
        EXPECT_EQ(dist[a][b], 12U);
      }
  auto l = certificate_masl_labeling(inst, {0, 1, 2});
  auto rep = verify(temporal_graph(inst.graph, l), inst.terminals, inst.age, inst.budget);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.label_count, 234U);
  for (const auto& path : inst.direct_paths) {
    std::size_t c = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) c += l.labels_of(make_edge(path[i], path[i + 1])).size();
    EXPECT_EQ(c, 24U);
  }
}

TEST(MaslReduction, LargerGraphWithPlantedClique) {
  // colors 0,1,2 with two vertices each; the clique is {0, 2, 4}
  static_graph g(6, {{0, 2}, {0, 4}, {2, 4}, {1, 2}, {3, 5}, {1, 4}});
  std::vector<std::size_t> colors{0, 0, 1, 1, 2, 2};
  auto inst = build_masl_instance(g, 3, colors);
  auto dist = all_pairs_distances(inst.graph);
  for (vertex a : inst.terminals)
    for (vertex b : inst.terminals)
      if (a != b) {
        EXPECT_EQ(dist[a][b], 12U);
      }
  auto l = certificate_masl_labeling(inst, {4, 0, 2});
  auto rep = verify(temporal_graph(inst.graph, l), inst.terminals, inst.age, inst.budget);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.label_count, inst.budget);
}

TEST(MaslReduction, Errors) {
  auto k3 = oracle::complete_graph(3);
  EXPECT_THROW(build_masl_instance(k3, 1, {0, 0, 0}), validation_error);
  EXPECT_THROW(build_masl_instance(k3, 3, {0, 1}), validation_error);
  EXPECT_THROW(build_masl_instance(k3, 3, {0, 1, 3}), validation_error);
  EXPECT_THROW(build_masl_instance(k3, 3, {0, 1, 1}), validation_error);
  auto inst = build_masl_instance(k3, 3, {0, 1, 2});
  EXPECT_THROW(certificate_masl_labeling(inst, {0, 1}), validation_error);
  EXPECT_THROW(certificate_masl_labeling(inst, {0, 1, 1}), validation_error);
  static_graph path(3, {{0, 1}, {1, 2}});
  auto open = build_masl_instance(path, 3, {0, 1, 2});
  EXPECT_THROW(certificate_masl_labeling(open, {0, 1, 2}), validation_error);  // 0-2 missing
}
