#ifndef TLAB_STEINER_HPP
#define TLAB_STEINER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/ml.hpp"
#include "tlab/reach.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

struct steiner_result {
  std::size_t cost = 0;     // edge count
  std::vector<edge> edges;  // sorted
};

inline std::vector<vertex> normalized_terminals(std::size_t n, std::vector<vertex> terminals) {
  for (vertex r : terminals) {
    if (r >= n) {
      throw validation_error("terminal " + std::to_string(r) + " out of range (n = " +
                             std::to_string(n) + ")");
    }
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return terminals;
}

namespace detail {

class union_find {
 public:
  explicit union_find(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Minimum-edge Steiner tree by the Dreyfus-Wagner subset DP: dp[S][v] is the
// cheapest tree containing the terminals of S plus v, built from merges at v
// and unit-cost growth along edges. Ties keep the first candidate found, so
// the reconstructed tree is deterministic.
inline steiner_result steiner_tree(const static_graph& g, const std::vector<vertex>& terminals_in) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  if (terminals.empty()) throw validation_error("empty terminal set");
  require_connected(g);
  if (terminals.size() > 20) throw validation_error("too many terminals for the subset DP");

  const std::size_t n = g.vertex_count();
  const std::size_t t = terminals.size();
  const std::size_t full = (std::size_t{1} << t) - 1;
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;

  enum class step : std::uint8_t { none, base, merge, grow };
  struct cell {
    std::size_t cost = inf;
    step how = step::none;
    std::size_t arg = 0;  // merge: submask, grow: predecessor vertex
  };
  std::vector<std::vector<cell>> dp(full + 1, std::vector<cell>(n));
  for (std::size_t i = 0; i < t; ++i) dp[std::size_t{1} << i][terminals[i]] = {0, step::base, 0};

  using item = std::pair<std::size_t, vertex>;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    auto& row = dp[mask];
    const std::size_t low = mask & (~mask + 1);
    if (mask != low) {
      for (vertex v = 0; v < n; ++v) {
        for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;  // each split once
          std::size_t c = dp[sub][v].cost + dp[mask ^ sub][v].cost;
          if (c < row[v].cost) row[v] = {c, step::merge, sub};
        }
      }
    }
    std::priority_queue<item, std::vector<item>, std::greater<>> queue;
    for (vertex v = 0; v < n; ++v) {
      if (row[v].cost < inf) queue.push({row[v].cost, v});
    }
    while (!queue.empty()) {
      auto [c, v] = queue.top();
      queue.pop();
      if (c != row[v].cost) continue;
      for (vertex w : g.neighbors(v)) {
        if (c + 1 < row[w].cost) {
          row[w] = {c + 1, step::grow, v};
          queue.push({c + 1, w});
        }
      }
    }
  }

  std::set<edge> chosen;
  std::function<void(std::size_t, vertex)> rebuild = [&](std::size_t mask, vertex v) {
    const cell& c = dp[mask][v];
    switch (c.how) {
      case step::base:
        break;
      case step::merge:
        rebuild(c.arg, v);
        rebuild(mask ^ c.arg, v);
        break;
      case step::grow:
        chosen.insert(make_edge(c.arg, v));
        rebuild(mask, c.arg);
        break;
      case step::none:
        throw error("internal: Steiner DP cell not reachable");
    }
  };
  const vertex root = terminals.front();
  rebuild(full, root);

  steiner_result res;
  res.cost = dp[full][root].cost;
  res.edges.assign(chosen.begin(), chosen.end());
  if (res.edges.size() != res.cost) throw error("internal: Steiner reconstruction size mismatch");
  return res;
}

namespace detail {

struct msl_plan {
  std::size_t steiner_cost = 0;
  std::optional<four_cycle> cycle;  // cyclic order a,b,c,d when the C4 branch applies
  std::vector<edge> labeled_edges;  // tree, or tree plus the closing C4 edge
};

// Orders a C4 vertex set cyclically, starting from its least vertex.
inline four_cycle cyclic_order(const static_graph& g, four_cycle s) {
  std::sort(s.begin(), s.end());
  do {
    if (g.has_edge(s[0], s[1]) && g.has_edge(s[1], s[2]) && g.has_edge(s[2], s[3]) &&
        g.has_edge(s[3], s[0])) {
      return s;
    }
  } while (std::next_permutation(s.begin() + 1, s.end()));
  throw error("internal: vertex set is not a 4-cycle");
}

inline msl_plan plan_msl(const static_graph& g, const std::vector<vertex>& terminals) {
  msl_plan plan;
  auto base = steiner_tree(g, terminals);
  plan.steiner_cost = base.cost;
  plan.labeled_edges = base.edges;
  for (const four_cycle& s : c4_vertex_sets(g)) {
    std::vector<vertex> extended = terminals;
    extended.insert(extended.end(), s.begin(), s.end());
    auto with_cycle = steiner_tree(g, extended);
    if (with_cycle.cost != base.cost) continue;

    four_cycle c = cyclic_order(g, s);
    // Spanning tree of (tree + cycle) through the path a-b-c-d, then close it with da.
    union_find uf(g.vertex_count());
    std::vector<edge> h;
    for (std::size_t i = 0; i < 3; ++i) {
      uf.unite(c[i], c[i + 1]);
      h.push_back(make_edge(c[i], c[i + 1]));
    }
    for (const edge& e : with_cycle.edges) {
      if (uf.unite(e.u, e.v)) h.push_back(e);
    }
    h.push_back(make_edge(c[3], c[0]));
    std::sort(h.begin(), h.end());
    plan.cycle = c;
    plan.labeled_edges = std::move(h);
    break;
  }
  return plan;
}

}  // namespace detail

// 2k*-2 if some C4 can be absorbed into a minimum Steiner tree
// without extra edges, else 2k*-1; 0 for at most one terminal.
inline std::size_t msl_optimum_size(const static_graph& g, const std::vector<vertex>& terminals_in) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  require_connected(g);
  if (terminals.size() <= 1) return 0;
  auto plan = detail::plan_msl(g, terminals);
  return plan.cycle ? 2 * plan.steiner_cost - 2 : 2 * plan.steiner_cost - 1;
}

// Labels the planned subgraph with the ML construction; the result is checked
// for R-connectivity and the optimum count before it is returned.
inline labeling msl_label(const static_graph& g, const std::vector<vertex>& terminals_in) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  require_connected(g);
  if (terminals.size() <= 1) return {};
  auto plan = detail::plan_msl(g, terminals);
  auto sub = edge_subgraph(g.vertex_count(), plan.labeled_edges);
  labeling local = ml_label(sub.graph);
  labeling out;
  for (const auto& [e, ts] : local) {
    for (time_label t : ts) out.add(make_edge(sub.to_original[e.u], sub.to_original[e.v]), t);
  }
  std::size_t expected = plan.cycle ? 2 * plan.steiner_cost - 2 : 2 * plan.steiner_cost - 1;
  if (out.size() != expected || !is_r_connected(temporal_graph(g, out), terminals)) {
    throw error("internal: MSL construction failed self-check");
  }
  return out;
}

namespace detail {

inline bool leaves_are_terminals(const std::vector<edge>& edges,
                                 const std::vector<vertex>& terminals) {
  std::map<vertex, std::size_t> deg;
  for (const edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (const auto& [v, d] : deg) {
    if (d == 1 && !std::binary_search(terminals.begin(), terminals.end(), v)) return false;
  }
  return true;
}

inline bool is_tree(std::size_t n, const std::vector<edge>& edges, std::size_t vertex_count) {
  if (edges.size() + 1 != vertex_count) return false;
  union_find uf(n);
  for (const edge& e : edges) {
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace detail

// Structure of a minimum Steiner labeling: the labeled edges form a tree whose
// leaves are terminals, or such a tree plus one edge closing a C4.
inline bool check_structure_lemma(const static_graph& g, const std::vector<vertex>& terminals_in,
                                  const labeling& l) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  std::vector<edge> h = l.labeled_edges();
  if (h.empty()) return terminals.size() <= 1;

  std::set<vertex> vs;
  for (const edge& e : h) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  if (terminals.size() >= 2) {
    for (vertex r : terminals) {
      if (!vs.count(r)) return false;
    }
  }
  const std::size_t n = g.vertex_count();
  if (detail::is_tree(n, h, vs.size())) return detail::leaves_are_terminals(h, terminals);
  if (h.size() != vs.size()) return false;

  // Unicyclic candidate: dropping a cycle edge must leave a tree.
  std::vector<edge> cycle;
  for (const edge& e : h) {
    std::vector<edge> rest;
    for (const edge& f : h) {
      if (f != e) rest.push_back(f);
    }
    if (detail::is_tree(n, rest, vs.size())) cycle.push_back(e);
  }
  if (cycle.size() != 4) return false;
  for (const edge& e : cycle) {
    std::vector<edge> rest;
    for (const edge& f : h) {
      if (f != e) rest.push_back(f);
    }
    if (detail::leaves_are_terminals(rest, terminals)) return true;
  }
  return false;
}

}  // namespace tlab

#endif  // TLAB_STEINER_HPP
