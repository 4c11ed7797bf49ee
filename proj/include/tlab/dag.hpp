#ifndef TLAB_DAG_HPP
#define TLAB_DAG_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

// L0 = sources; Li = sources of the subgraph induced by Li..Ld.
struct layering {
  std::vector<std::vector<vertex>> layers;
  std::vector<std::size_t> layer_of;  // vertex -> layer index

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
};

// In-degree peeling: a vertex joins layer i+1 once all its in-arcs come from
// layers <= i. Linear in n + m.
inline layering canonical_layering(const directed_graph& d) {
  const std::size_t n = d.vertex_count();
  layering out;
  out.layer_of.assign(n, unreachable);
  std::vector<std::size_t> seen_in(n, 0);
  std::vector<vertex> current;
  for (vertex v = 0; v < n; ++v) {
    if (d.in_neighbors(v).empty()) current.push_back(v);
  }
  std::size_t placed = 0;
  while (!current.empty()) {
    for (vertex v : current) out.layer_of[v] = out.layers.size();
    placed += current.size();
    std::vector<vertex> next;
    for (vertex u : current) {
      for (vertex v : d.out_neighbors(u)) {
        if (++seen_in[v] == d.in_neighbors(v).size()) next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(current));
    current = std::move(next);
  }
  if (placed != n) throw not_dag_error();
  return out;
}

namespace detail {

// Is `target` reachable from `from` without using the arc `skip`?
inline bool reachable_avoiding(const directed_graph& d, vertex from, vertex target, edge skip) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    vertex x = stack.back();
    stack.pop_back();
    for (vertex y : d.out_neighbors(x)) {
      if (x == skip.u && y == skip.v) continue;
      if (y == target) return true;
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace detail

// Transitive reduction: arcs (u,v) whose head is unreachable from u once the
// arc itself is deleted.
inline std::vector<edge> shortcut_free_arcs(const directed_graph& d) {
  canonical_layering(d);  // rejects cycles
  std::vector<edge> out;
  for (const edge& a : d.arcs()) {
    if (!detail::reachable_avoiding(d, a.u, a.v, a)) out.push_back(a);
  }
  return out;
}

// Labels each shortcut-free arc (u,v) once with the layer index of v. Temporal
// reachability then equals static reachability, with the fewest labels.
inline directed_temporal_graph dag_min_labeling(const directed_graph& d) {
  auto layers = canonical_layering(d);
  labeling l;
  for (const edge& a : shortcut_free_arcs(d)) {
    l.add(a, static_cast<time_label>(layers.layer_of[a.v]));
  }
  return directed_temporal_graph(d, std::move(l));
}

// Static reachability matrix (reflexive).
inline std::vector<std::vector<bool>> transitive_closure(const directed_graph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (vertex s = 0; s < n; ++s) {
    std::vector<vertex> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      vertex x = stack.back();
      stack.pop_back();
      for (vertex y : d.out_neighbors(x)) {
        if (!reach[s][y]) {
          reach[s][y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return reach;
}

}  // namespace tlab

#endif  // TLAB_DAG_HPP
