#ifndef TLAB_ML_HPP
#define TLAB_ML_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/reach.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

// Minimum |lambda| making a connected graph temporally connected:
// 2n-4 with a C4 subgraph, 2n-3 otherwise, 0 for a single vertex.
inline std::size_t ml_optimum_size(const static_graph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  return find_c4(g) ? 2 * n - 4 : 2 * n - 3;
}

namespace detail {

// Spanning forest grown by one BFS from all roots at once; every non-root
// vertex records its parent, depth, and subtree height.
struct rooted_forest {
  std::vector<std::optional<vertex>> parent;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> height;
  std::vector<vertex> order;  // BFS order, roots first
};

inline rooted_forest bfs_forest(const static_graph& g, const std::vector<vertex>& roots,
                                const std::vector<edge>& forbidden = {}) {
  const std::size_t n = g.vertex_count();
  rooted_forest f;
  f.parent.assign(n, std::nullopt);
  f.depth.assign(n, unreachable);
  f.height.assign(n, 0);
  std::queue<vertex> queue;
  for (vertex r : roots) {
    f.depth[r] = 0;
    queue.push(r);
  }
  while (!queue.empty()) {
    vertex x = queue.front();
    queue.pop();
    f.order.push_back(x);
    for (vertex y : g.neighbors(x)) {
      if (f.depth[y] != unreachable) continue;
      if (std::find(forbidden.begin(), forbidden.end(), make_edge(x, y)) != forbidden.end()) {
        continue;
      }
      f.depth[y] = f.depth[x] + 1;
      f.parent[y] = x;
      queue.push(y);
    }
  }
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    if (f.parent[*it]) {
      vertex p = *f.parent[*it];
      f.height[p] = std::max(f.height[p], f.height[*it] + 1);
    }
  }
  return f;
}

// Accumulate into the roots, fire the root edges in rounds, then broadcast.
// Child->parent edge of v gets height(v)+1, so it fires after every edge below v.
// Root rounds occupy H+1 .. H+rounds where H is the tallest root; the
// parent->child edge of v then gets H+rounds+depth(v).
inline labeling accumulate_fire_broadcast(const rooted_forest& f,
                                          const std::vector<std::vector<edge>>& rounds,
                                          const std::vector<vertex>& roots) {
  time_label top = 0;
  for (vertex r : roots) top = std::max(top, static_cast<time_label>(f.height[r]));
  labeling l;
  for (vertex v : f.order) {
    if (!f.parent[v]) continue;
    edge e = make_edge(v, *f.parent[v]);
    l.add(e, static_cast<time_label>(f.height[v]) + 1);
    l.add(e, top + static_cast<time_label>(rounds.size()) + static_cast<time_label>(f.depth[v]));
  }
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    for (const edge& e : rounds[i]) l.add(e, top + static_cast<time_label>(i) + 1);
  }
  return l;
}

}  // namespace detail

// Optimal labeling for ML. Tree case: BFS tree from vertex 0, the edge from 0
// to its first child fires once between accumulation and broadcast. C4 case:
// BFS forest from the least C4's corners, cycle edges fire in two rounds
// (ab,cd then bc,da). Self-checked against the reachability engine.
inline labeling ml_label(const static_graph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return {};

  labeling l;
  if (auto c = find_c4(g)) {
    auto [a, b, cc, d] = *c;
    std::vector<vertex> roots{a, b, cc, d};
    auto forest = detail::bfs_forest(g, roots);
    l = detail::accumulate_fire_broadcast(
        forest, {{make_edge(a, b), make_edge(cc, d)}, {make_edge(b, cc), make_edge(d, a)}}, roots);
  } else {
    vertex u = 0;
    vertex v = g.neighbors(0).front();
    // Splitting the BFS tree at uv: grow both sides from u and v with uv itself
    // excluded, which is the BFS tree from 0 with the subtree under v re-rooted.
    std::vector<vertex> roots{u, v};
    auto forest = detail::bfs_forest(g, roots, {make_edge(u, v)});
    l = detail::accumulate_fire_broadcast(forest, {{make_edge(u, v)}}, roots);
  }

  temporal_graph check(g, l);
  if (l.size() != ml_optimum_size(g) || !is_temporally_connected(check)) {
    throw error("internal: ML construction failed self-check");
  }
  return l;
}

// Gossip view of a labeling: one call per time-edge, totally ordered.
struct call_sequence {
  std::vector<edge> calls;

  friend bool operator==(const call_sequence&, const call_sequence&) = default;
};

// Labels sorted by (time, edge): empty time steps vanish and equal times are
// broken lexicographically, which is valid because no temporal path uses two
// labels of the same time.
inline call_sequence labeling_to_calls(const temporal_graph& tg) {
  if (!is_temporally_connected(tg)) {
    throw validation_error("labeling is not temporally connected");
  }
  call_sequence cs;
  cs.calls.reserve(tg.time_edges().size());
  for (const time_edge& te : tg.time_edges()) cs.calls.push_back(te.e);
  return cs;
}

// Call i becomes label i on its edge.
inline temporal_graph calls_to_labeling(const static_graph& g, const call_sequence& cs) {
  labeling l;
  time_label t = 0;
  for (const edge& c : cs.calls) {
    ++t;
    if (!g.has_edge(c.u, c.v)) {
      throw validation_error("call " + to_string(c) + " is not an edge of the graph");
    }
    l.add(make_edge(c.u, c.v), t);
  }
  return temporal_graph(g, std::move(l));
}

// Simulates the calls: each call merges the two agents' secret sets.
inline bool gossip_completes(std::size_t agents, const call_sequence& cs) {
  std::vector<std::vector<bool>> knows(agents, std::vector<bool>(agents, false));
  for (std::size_t i = 0; i < agents; ++i) knows[i][i] = true;
  for (const edge& c : cs.calls) {
    if (c.u >= agents || c.v >= agents) throw validation_error("call on unknown agent");
    for (std::size_t s = 0; s < agents; ++s) {
      bool k = knows[c.u][s] || knows[c.v][s];
      knows[c.u][s] = k;
      knows[c.v][s] = k;
    }
  }
  for (const auto& row : knows) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

}  // namespace tlab

#endif  // TLAB_ML_HPP
