#ifndef TLAB_REDUCTIONS_HPP
#define TLAB_REDUCTIONS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

namespace detail {

// Appends a path of `length` edges from `from` to `to` through fresh vertices;
// returns the full vertex sequence.
inline std::vector<vertex> add_path(static_graph& g, vertex from, vertex to, std::size_t length) {
  std::vector<vertex> seq{from};
  for (std::size_t i = 1; i < length; ++i) seq.push_back(g.add_vertex());
  seq.push_back(to);
  for (std::size_t i = 1; i < seq.size(); ++i) g.add_edge(seq[i - 1], seq[i]);
  return seq;
}

// Edge i of the sequence (1-based) gets label start + i - 1.
inline void label_along(labeling& l, const std::vector<vertex>& seq, time_label start) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    l.add(make_edge(seq[i - 1], seq[i]), start + static_cast<time_label>(i) - 1);
  }
}

inline std::vector<vertex> reversed(std::vector<vertex> seq) {
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Monotone Max XOR(3) -> MAL

struct xor3_formula {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> clauses;  // (x_i xor x_j), 0-based

  // n even, m = 3n/2, each variable in exactly three clauses, no clause (x, x).
  void validate() const {
    if (n < 2 || n % 2 != 0) throw validation_error("formula needs an even number n >= 2 of variables");
    if (clauses.size() * 2 != 3 * n) throw validation_error("formula needs exactly 3n/2 clauses");
    std::vector<std::size_t> count(n, 0);
    for (auto [i, j] : clauses) {
      if (i >= n || j >= n) throw validation_error("clause mentions an unknown variable");
      if (i == j) throw validation_error("clause repeats a variable");
      ++count[i];
      ++count[j];
    }
    for (std::size_t c : count) {
      if (c != 3) throw validation_error("every variable must appear in exactly 3 clauses");
    }
  }
};

using truth_assignment = std::vector<bool>;

inline std::size_t satisfied_clauses(const xor3_formula& f, const truth_assignment& tau) {
  if (tau.size() != f.n) throw validation_error("truth assignment is not total");
  std::size_t k = 0;
  for (auto [i, j] : f.clauses) k += tau[i] != tau[j];
  return k;
}

// Configuration model: three copies of every variable, shuffled and paired,
// resampled until no clause pairs a variable with itself. Repeated clauses
// are allowed.
inline xor3_formula random_xor3_formula(std::size_t n, std::uint64_t seed) {
  xor3_formula f;
  f.n = n;
  if (n < 2 || n % 2 != 0) throw validation_error("formula needs an even number n >= 2 of variables");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> stubs;
  for (std::size_t i = 0; i < n; ++i) stubs.insert(stubs.end(), 3, i);
  for (;;) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    f.clauses.clear();
    bool ok = true;
    for (std::size_t p = 0; p < stubs.size(); p += 2) {
      if (stubs[p] == stubs[p + 1]) {
        ok = false;
        break;
      }
      f.clauses.emplace_back(std::min(stubs[p], stubs[p + 1]), std::max(stubs[p], stubs[p + 1]));
    }
    if (ok) return f;
  }
}

// One physical fork per clause. `p` holds f, g, h, m of the first variable's
// left side (the second variable's right side); `q` the other way round.
struct mal_fork {
  vertex t = 0;
  std::array<vertex, 4> p{};
  std::array<vertex, 4> q{};
  std::size_t first = 0;
  std::size_t second = 0;
};

struct mal_variable {
  vertex s = 0;
  std::array<vertex, 5> left{};   // a b c d e
  std::array<vertex, 5> right{};  // a' b' c' d' e'
  std::array<std::size_t, 3> forks{};  // clause index of each appearance
};

struct mal_instance {
  static_graph graph;
  xor3_formula formula;
  time_label age = 10;
  std::vector<mal_variable> variables;
  std::vector<mal_fork> forks;
  std::map<std::string, vertex> gadget_index;

  // 13n^2/2 + 99n/2 - 8 k_sat
  std::size_t budget(std::size_t k_sat) const {
    const std::size_t n = formula.n;
    return (13 * n * n + 99 * n) / 2 - 8 * k_sat;
  }

  // f, g, h, m of variable i's fork at appearance a, on its left or right side.
  const std::array<vertex, 4>& fork_side(std::size_t i, std::size_t a, bool left) const {
    const mal_fork& f = forks[variables[i].forks[a]];
    return (f.first == i) == left ? f.p : f.q;
  }

  bool fork_shared_with(std::size_t i, std::size_t a, std::size_t j) const {
    const mal_fork& f = forks[variables[i].forks[a]];
    return f.first == j || f.second == j;
  }
};

inline mal_instance build_mal_instance(const xor3_formula& phi) {
  phi.validate();
  mal_instance inst;
  inst.formula = phi;
  const std::size_t n = phi.n;
  static_graph& g = inst.graph;
  auto name = [&](const std::string& role, std::size_t i) { return role + "_" + std::to_string(i); };

  static const char* base_roles = "abcde";
  for (std::size_t i = 0; i < n; ++i) {
    mal_variable var;
    var.s = g.add_vertex();
    inst.gadget_index[name("s", i)] = var.s;
    for (std::size_t y = 0; y < 5; ++y) {
      var.left[y] = g.add_vertex();
      inst.gadget_index[name(std::string(1, base_roles[y]), i)] = var.left[y];
    }
    for (std::size_t y = 0; y < 5; ++y) {
      var.right[y] = g.add_vertex();
      inst.gadget_index[name(std::string(1, base_roles[y]) + "bar", i)] = var.right[y];
    }
    inst.variables.push_back(var);
  }
  std::vector<std::size_t> seen(n, 0);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    auto [i, j] = phi.clauses[c];
    mal_fork f;
    f.first = i;
    f.second = j;
    f.t = g.add_vertex();
    for (auto& v : f.p) v = g.add_vertex();
    for (auto& v : f.q) v = g.add_vertex();
    inst.variables[i].forks[seen[i]++] = c;
    inst.variables[j].forks[seen[j]++] = c;
    inst.forks.push_back(f);
  }

  static const char* fork_roles[] = {"f", "g", "h", "m"};
  for (std::size_t i = 0; i < n; ++i) {
    const mal_variable& var = inst.variables[i];
    g.add_edge(var.s, var.left[0]);
    g.add_edge(var.s, var.right[0]);
    for (std::size_t y = 0; y < 5; ++y) {
      if (y + 1 < 5) {
        g.add_edge(var.left[y], var.left[y + 1]);
        g.add_edge(var.right[y], var.right[y + 1]);
      }
      g.add_edge(var.left[y], var.right[y]);
    }
    for (std::size_t a = 0; a < 3; ++a) {
      const auto& l = inst.fork_side(i, a, true);
      const auto& r = inst.fork_side(i, a, false);
      const std::string sup = "^" + std::to_string(a + 1);
      inst.gadget_index[name("t", i) + sup] = inst.forks[var.forks[a]].t;
      for (std::size_t y = 0; y < 4; ++y) {
        inst.gadget_index[name(fork_roles[y], i) + sup] = l[y];
        inst.gadget_index[name(std::string(fork_roles[y]) + "bar", i) + sup] = r[y];
      }
      g.add_edge_if_absent(var.left[4], l[0]);
      g.add_edge_if_absent(var.right[4], r[0]);
    }
  }
  for (const mal_fork& f : inst.forks) {
    for (const auto* side : {&f.p, &f.q}) {
      g.add_edge((*side)[3], f.t);
      for (std::size_t y = 0; y + 1 < 4; ++y) g.add_edge((*side)[y], (*side)[y + 1]);
    }
    for (std::size_t y = 0; y < 4; ++y) g.add_edge(f.p[y], f.q[y]);
  }

  // Variable edges for every pair; bridges only towards forks the pair does not share.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const mal_variable& vx = inst.variables[x];
        for (std::size_t a = 0; a < 3; ++a) {
          if (inst.fork_shared_with(y, a, x)) continue;
          for (vertex e : {vx.left[4], vx.right[4]}) {
            g.add_edge_if_absent(e, inst.fork_side(y, a, true)[0]);
            g.add_edge_if_absent(e, inst.fork_side(y, a, false)[0]);
          }
        }
      }
      const mal_variable& vi = inst.variables[i];
      const mal_variable& vj = inst.variables[j];
      for (vertex di : {vi.left[3], vi.right[3]}) {
        for (vertex dj : {vj.left[3], vj.right[3]}) g.add_edge_if_absent(di, dj);
      }
    }
  }
  return inst;
}

// TRUE variables use their left paths, FALSE ones their right paths. Each
// s -> t path is labeled 1..10 in both directions, connecting edges get 1 and
// 10, and between two gadgets the aligned d-d edge gets 5 and each aligned
// bridge into a fork the pair does not share gets 4 and 6.
inline labeling certificate_mal_labeling(const mal_instance& inst, const truth_assignment& tau) {
  const std::size_t n = inst.formula.n;
  if (tau.size() != n) throw validation_error("truth assignment is not total");
  labeling l;
  for (std::size_t i = 0; i < n; ++i) {
    const mal_variable& var = inst.variables[i];
    const auto& base = tau[i] ? var.left : var.right;
    for (std::size_t y = 0; y < 5; ++y) l.add(make_edge(var.left[y], var.right[y]), {1, 10});
    for (std::size_t a = 0; a < 3; ++a) {
      const auto& fork = inst.fork_side(i, a, tau[i]);
      const auto& other = inst.fork_side(i, a, !tau[i]);
      std::vector<vertex> path{var.s};
      path.insert(path.end(), base.begin(), base.end());
      path.insert(path.end(), fork.begin(), fork.end());
      path.push_back(inst.forks[var.forks[a]].t);
      detail::label_along(l, path, 1);
      detail::label_along(l, detail::reversed(path), 1);
      for (std::size_t y = 0; y < 4; ++y) l.add(make_edge(fork[y], other[y]), {1, 10});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const mal_variable& vx = inst.variables[x];
        vertex e = tau[x] ? vx.left[4] : vx.right[4];
        for (std::size_t a = 0; a < 3; ++a) {
          if (inst.fork_shared_with(y, a, x)) continue;
          l.add(make_edge(e, inst.fork_side(y, a, tau[y])[0]), {4, 6});
        }
      }
      const auto& vi = inst.variables[i];
      const auto& vj = inst.variables[j];
      l.add(make_edge(tau[i] ? vi.left[3] : vi.right[3], tau[j] ? vj.left[3] : vj.right[3]), 5);
    }
  }
  return l;
}

// ---------------------------------------------------------------------------
// Vertex Cover -> MSL

struct msl_instance {
  static_graph graph;
  std::vector<vertex> terminals;  // n0 then the edge-vertices
  std::size_t budget = 0;         // k*
  std::size_t k = 0;
  static_graph source;

  vertex n0 = 0;
  vertex n1 = 1;
  std::vector<vertex> vertex_vertices;  // u_v
  std::vector<vertex> edge_vertices;    // u_e, in source edge order
  std::vector<vertex> dummies;

  std::vector<std::vector<vertex>> vertex_paths;                    // n1 ... u_v
  std::vector<std::array<std::vector<vertex>, 2>> incidence_paths;  // u_e ... u_endpoint
};

inline msl_instance build_msl_instance(const static_graph& g, std::size_t k) {
  if (k < 1) throw validation_error("cover size k must be >= 1");
  msl_instance inst;
  inst.k = k;
  inst.source = g;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  static_graph& h = inst.graph;
  h = static_graph(2 + n + m);
  inst.n0 = 0;
  inst.n1 = 1;
  for (std::size_t v = 0; v < n; ++v) inst.vertex_vertices.push_back(2 + v);
  for (std::size_t e = 0; e < m; ++e) inst.edge_vertices.push_back(2 + n + e);
  h.add_edge(inst.n0, inst.n1);
  for (std::size_t v = 0; v < n; ++v) {
    inst.vertex_paths.push_back(detail::add_path(h, inst.n1, inst.vertex_vertices[v], 3));
  }
  for (std::size_t e = 0; e < m; ++e) {
    const edge& uv = g.edges()[e];
    std::array<std::vector<vertex>, 2> paths;
    paths[0] = detail::add_path(h, inst.edge_vertices[e], inst.vertex_vertices[uv.u], 6 * k + 1);
    paths[1] = detail::add_path(h, inst.edge_vertices[e], inst.vertex_vertices[uv.v], 6 * k + 1);
    inst.incidence_paths.push_back(std::move(paths));
  }
  for (vertex v = 2 + n + m; v < h.vertex_count(); ++v) inst.dummies.push_back(v);
  inst.terminals.push_back(inst.n0);
  inst.terminals.insert(inst.terminals.end(), inst.edge_vertices.begin(), inst.edge_vertices.end());
  inst.budget = 6 * k + 2 * m * (6 * k + 1) + 1;
  return inst;
}

// Forwarding paths u_e -> u_v -> n1 -> n0 with labels 1 .. 6k+5, then the
// returning paths n0 -> n1 -> u_v -> u_e continuing from l* = 6k+5.
inline labeling certificate_msl_labeling(const msl_instance& inst, const std::vector<vertex>& cover) {
  const static_graph& g = inst.source;
  std::vector<bool> in_cover(g.vertex_count(), false);
  for (vertex v : cover) {
    if (v >= g.vertex_count()) throw validation_error("cover vertex out of range");
    if (in_cover[v]) throw validation_error("cover lists a vertex twice");
    in_cover[v] = true;
  }
  if (cover.size() != inst.k) throw validation_error("cover must have exactly k vertices");
  const auto k = static_cast<time_label>(inst.k);
  const time_label star = 6 * k + 5;
  labeling l;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const edge& uv = g.edges()[e];
    int side = in_cover[uv.u] ? 0 : in_cover[uv.v] ? 1 : -1;
    if (side < 0) throw validation_error("not a vertex cover: edge " + to_string(uv) + " uncovered");
    const auto& path = inst.incidence_paths[e][static_cast<std::size_t>(side)];
    detail::label_along(l, path, 1);
    detail::label_along(l, detail::reversed(path), star + 4);
  }
  for (vertex v : cover) {
    const auto& path = inst.vertex_paths[v];  // n1 ... u_v
    detail::label_along(l, detail::reversed(path), 6 * k + 2);
    detail::label_along(l, path, star + 1);
  }
  l.add(make_edge(inst.n0, inst.n1), star);
  return l;
}

// ---------------------------------------------------------------------------
// Multicolored Clique -> MASL

struct masl_instance {
  static_graph graph;
  std::vector<vertex> terminals;  // C then W
  time_label age = 12;
  std::size_t budget = 0;  // k*
  std::size_t k = 0;
  static_graph source;
  std::vector<std::size_t> coloring;

  std::vector<vertex> color_vertices;        // c_i
  std::vector<vertex> vertex_vertices;       // u_v
  std::vector<vertex> edge_vertices;         // u_e
  std::vector<vertex> combination_vertices;  // c_ij, pairs i<j in lexicographic order
  std::vector<vertex> dummies;

  std::vector<std::vector<vertex>> color_paths;                     // c_i ... u_v, per v
  std::vector<std::array<std::vector<vertex>, 2>> endpoint_paths;   // u_v ... u_e, per e and endpoint
  std::vector<std::vector<vertex>> combination_paths;               // u_e ... c_ij, per e
  std::vector<std::vector<vertex>> direct_paths;                    // length-12 terminal paths

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // rows i = 0..k-2 hold (k-1-i) pairs each
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
  }
};

inline std::size_t masl_budget(std::size_t k) {
  const std::size_t k2 = k * k;
  const std::size_t k3 = k2 * k;
  const std::size_t k4 = k3 * k;
  return 6 * k + 6 * (k2 - k) + 6 * (k2 - k) + 3 * (k4 + 2 * k - 2 * k3 - k2) +
         12 * (k3 + 2 * k - 3 * k2);
}

inline masl_instance build_masl_instance(const static_graph& g, std::size_t k,
                                         const std::vector<std::size_t>& coloring) {
  if (k < 2) throw validation_error("multicolored clique needs k >= 2 colors");
  if (coloring.size() != g.vertex_count()) throw validation_error("coloring must cover every vertex");
  for (std::size_t c : coloring) {
    if (c >= k) throw validation_error("color out of range");
  }
  for (const edge& e : g.edges()) {
    if (coloring[e.u] == coloring[e.v]) {
      throw validation_error("edge " + to_string(e) + " joins two vertices of the same color");
    }
  }
  masl_instance inst;
  inst.k = k;
  inst.source = g;
  inst.coloring = coloring;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t w = k * (k - 1) / 2;
  static_graph& h = inst.graph;
  h = static_graph(k + n + m + w);
  for (std::size_t i = 0; i < k; ++i) inst.color_vertices.push_back(i);
  for (std::size_t v = 0; v < n; ++v) inst.vertex_vertices.push_back(k + v);
  for (std::size_t e = 0; e < m; ++e) inst.edge_vertices.push_back(k + n + e);
  for (std::size_t p = 0; p < w; ++p) inst.combination_vertices.push_back(k + n + m + p);

  for (std::size_t v = 0; v < n; ++v) {
    inst.color_paths.push_back(
        detail::add_path(h, inst.color_vertices[coloring[v]], inst.vertex_vertices[v], 3));
  }
  for (std::size_t e = 0; e < m; ++e) {
    const edge& uv = g.edges()[e];
    vertex ue = inst.edge_vertices[e];
    std::array<std::vector<vertex>, 2> ends;
    ends[0] = detail::add_path(h, inst.vertex_vertices[uv.u], ue, 3);
    ends[1] = detail::add_path(h, inst.vertex_vertices[uv.v], ue, 3);
    inst.endpoint_paths.push_back(std::move(ends));
    vertex cij = inst.combination_vertices[inst.pair_index(coloring[uv.u], coloring[uv.v])];
    inst.combination_paths.push_back(detail::add_path(h, ue, cij, 6));
  }
  for (std::size_t p = 0; p < w; ++p) {
    for (std::size_t q = p + 1; q < w; ++q) {
      inst.direct_paths.push_back(
          detail::add_path(h, inst.combination_vertices[p], inst.combination_vertices[q], 12));
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (c == i || c == j) continue;
        inst.direct_paths.push_back(detail::add_path(
            h, inst.color_vertices[c], inst.combination_vertices[inst.pair_index(i, j)], 12));
      }
    }
  }
  for (vertex v = k + n + m + w; v < h.vertex_count(); ++v) inst.dummies.push_back(v);
  inst.terminals = inst.color_vertices;
  inst.terminals.insert(inst.terminals.end(), inst.combination_vertices.begin(),
                        inst.combination_vertices.end());
  inst.budget = masl_budget(k);
  return inst;
}

// c_i -> u_v uses 1,2,3 (back 10,11,12), u_v -> u_e uses 4,5,6 (back 7,8,9),
// u_e -> c_ij uses 7..12 (back 1..6), and every length-12 path carries 1..12
// in both directions.
inline labeling certificate_masl_labeling(const masl_instance& inst,
                                          const std::vector<vertex>& clique) {
  const static_graph& g = inst.source;
  std::vector<std::optional<vertex>> pick(inst.k);
  for (vertex v : clique) {
    if (v >= g.vertex_count()) throw validation_error("clique vertex out of range");
    auto c = inst.coloring[v];
    if (pick[c]) throw validation_error("clique has two vertices of one color");
    pick[c] = v;
  }
  for (const auto& p : pick) {
    if (!p) throw validation_error("clique misses a color");
  }
  labeling l;
  for (std::size_t a = 0; a < inst.k; ++a) {
    const auto& path = inst.color_paths[*pick[a]];
    detail::label_along(l, path, 1);
    detail::label_along(l, detail::reversed(path), 10);
  }
  for (std::size_t a = 0; a < inst.k; ++a) {
    for (std::size_t b = a + 1; b < inst.k; ++b) {
      auto e = g.edge_index(*pick[a], *pick[b]);
      if (!e) throw validation_error("clique vertices " + std::to_string(*pick[a]) + " and " +
                                     std::to_string(*pick[b]) + " are not adjacent");
      for (const auto& path : inst.endpoint_paths[*e]) {
        detail::label_along(l, path, 4);
        detail::label_along(l, detail::reversed(path), 7);
      }
      const auto& up = inst.combination_paths[*e];
      detail::label_along(l, up, 7);
      detail::label_along(l, detail::reversed(up), 1);
    }
  }
  for (const auto& path : inst.direct_paths) {
    detail::label_along(l, path, 1);
    detail::label_along(l, detail::reversed(path), 1);
  }
  return l;
}

}  // namespace tlab

#endif  // TLAB_REDUCTIONS_HPP
