#ifndef TLAB_GRAPH_HPP
#define TLAB_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tlab/error.hpp"

namespace tlab {

using vertex = std::size_t;

// An undirected edge is stored with u < v; an arc keeps its orientation.
struct edge {
  vertex u = 0;
  vertex v = 0;

  friend auto operator<=>(const edge&, const edge&) = default;
};

inline edge make_edge(vertex a, vertex b) { return a < b ? edge{a, b} : edge{b, a}; }

inline std::string to_string(const edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace detail {

inline void insert_sorted_unique(std::vector<vertex>& list, vertex x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) list.insert(it, x);
}

// Shared storage for both graph kinds: a sorted, duplicate-free edge list plus
// sorted adjacency.
template <bool Directed>
class graph_base {
 public:
  static constexpr bool is_directed = Directed;

  graph_base() = default;
  explicit graph_base(std::size_t n) : out_(n), in_(Directed ? n : 0) {}

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<edge>& edges() const noexcept { return edges_; }

  edge key(vertex a, vertex b) const { return Directed ? edge{a, b} : make_edge(a, b); }

  bool has_edge(vertex a, vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    return std::binary_search(edges_.begin(), edges_.end(), key(a, b));
  }

  // Index of the edge in edges(), or nullopt.
  std::optional<std::size_t> edge_index(vertex a, vertex b) const {
    auto k = key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), k);
    if (it == edges_.end() || *it != k) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  // Returns false (and changes nothing) when the edge is already present.
  bool add_edge_if_absent(vertex a, vertex b) {
    check_endpoints(a, b);
    auto k = key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), k);
    if (it != edges_.end() && *it == k) return false;
    edges_.insert(it, k);
    insert_sorted_unique(out_[a], b);
    if constexpr (Directed) {
      insert_sorted_unique(in_[b], a);
    } else {
      insert_sorted_unique(out_[b], a);
    }
    return true;
  }

  void add_edge(vertex a, vertex b) {
    if (!add_edge_if_absent(a, b)) {
      throw validation_error("duplicate " + std::string(Directed ? "arc " : "edge ") +
                             to_string(edge{a, b}));
    }
  }

  vertex add_vertex() {
    out_.emplace_back();
    if constexpr (Directed) in_.emplace_back();
    return out_.size() - 1;
  }

  friend bool operator==(const graph_base& x, const graph_base& y) {
    return x.vertex_count() == y.vertex_count() && x.edges_ == y.edges_;
  }

 protected:
  void check_endpoints(vertex a, vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) {
      throw validation_error("endpoint out of range in " + to_string(edge{a, b}) + " (n = " +
                             std::to_string(vertex_count()) + ")");
    }
    if (a == b) throw validation_error("self-loop at vertex " + std::to_string(a));
  }

  std::vector<edge> edges_;
  std::vector<std::vector<vertex>> out_;
  std::vector<std::vector<vertex>> in_;
};

}  // namespace detail

class static_graph : public detail::graph_base<false> {
 public:
  using graph_base::graph_base;

  static_graph(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> list)
      : graph_base(n) {
    for (auto [a, b] : list) add_edge(a, b);
  }

  const std::vector<vertex>& neighbors(vertex v) const { return out_.at(v); }
  std::size_t degree(vertex v) const { return out_.at(v).size(); }
};

class directed_graph : public detail::graph_base<true> {
 public:
  using graph_base::graph_base;

  directed_graph(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> list)
      : graph_base(n) {
    for (auto [a, b] : list) add_edge(a, b);
  }

  const std::vector<edge>& arcs() const noexcept { return edges_; }
  const std::vector<vertex>& out_neighbors(vertex v) const { return out_.at(v); }
  const std::vector<vertex>& in_neighbors(vertex v) const { return in_.at(v); }
};

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// BFS hop distances; `unreachable` for vertices in other components.
inline std::vector<std::size_t> bfs_distances(const static_graph& g, vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), unreachable);
  std::queue<vertex> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    vertex x = queue.front();
    queue.pop();
    for (vertex y : g.neighbors(x)) {
      if (dist[y] == unreachable) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<std::size_t>> all_pairs_distances(const static_graph& g) {
  std::vector<std::vector<std::size_t>> d;
  d.reserve(g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

inline bool is_connected(const static_graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == unreachable; });
}

inline void require_connected(const static_graph& g) {
  if (!is_connected(g)) throw disconnected_error();
}

inline std::size_t diameter(const static_graph& g) {
  std::size_t best = 0;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t x : bfs_distances(g, v)) {
      if (x == unreachable) throw disconnected_error();
      best = std::max(best, x);
    }
  }
  return best;
}

using four_cycle = std::array<vertex, 4>;

// Lexicographically least (a,b,c,d) with ab, bc, cd, da all edges.
inline std::optional<four_cycle> find_c4(const static_graph& g) {
  for (vertex a = 0; a < g.vertex_count(); ++a) {
    for (vertex b : g.neighbors(a)) {
      for (vertex c : g.neighbors(b)) {
        if (c == a) continue;
        for (vertex d : g.neighbors(c)) {
          if (d == a || d == b) continue;
          if (g.has_edge(d, a)) return four_cycle{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

// Every 4-cycle reported once, as its ascending vertex set.
inline std::vector<four_cycle> c4_vertex_sets(const static_graph& g) {
  std::vector<four_cycle> out;
  const std::size_t n = g.vertex_count();
  // Fix a = min vertex; the opposite corner c > a; b, d are common neighbours of a and c.
  for (vertex a = 0; a < n; ++a) {
    for (vertex c = a + 1; c < n; ++c) {
      std::vector<vertex> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(c).begin(),
                            g.neighbors(c).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (common[i] < a || common[j] < a) continue;
          four_cycle s{a, c, common[i], common[j]};
          std::sort(s.begin(), s.end());
          out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Subgraph on the given edges, vertices renumbered 0..k-1 in ascending order.
// `to_original[i]` maps back.
struct induced_edge_subgraph {
  static_graph graph;
  std::vector<vertex> to_original;
};

inline induced_edge_subgraph edge_subgraph(std::size_t n, const std::vector<edge>& edges) {
  std::vector<vertex> local(n, unreachable);
  induced_edge_subgraph out;
  std::vector<vertex> used;
  for (const edge& e : edges) {
    used.push_back(e.u);
    used.push_back(e.v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (std::size_t i = 0; i < used.size(); ++i) local.at(used[i]) = i;
  out.graph = static_graph(used.size());
  for (const edge& e : edges) out.graph.add_edge(local[e.u], local[e.v]);
  out.to_original = std::move(used);
  return out;
}

}  // namespace tlab

#endif  // TLAB_GRAPH_HPP
