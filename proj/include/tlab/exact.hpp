#ifndef TLAB_EXACT_HPP
#define TLAB_EXACT_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/ml.hpp"
#include "tlab/reach.hpp"
#include "tlab/steiner.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

struct search_config {
  std::size_t max_slots = 24;               // cap on |E| * a
  std::optional<std::size_t> budget_hint;   // known lower bound; deepening starts here
  std::size_t workers = 1;
};

struct exact_result {
  std::size_t k_min = 0;
  labeling witness;
};

namespace detail {

// Time-ordered search over labelings. State: for every vertex, the set of
// terminals that have reached it so far (one bit per terminal). Normal forms
// that lose nothing: no empty time steps, no label on an edge whose endpoints
// already agree, and once the remaining budget fits in the remaining steps,
// one label per step with adjacent disjoint labels in ascending edge order.
class labeling_search {
 public:
  using state = std::vector<std::uint64_t>;

  labeling_search(const static_graph& g, const std::vector<vertex>& terminals, time_label age)
      : edges_(g.edges()), terminals_(terminals), age_(age), dist_(all_pairs_distances(g)) {
    if (terminals_.size() > 64) throw validation_error("exact oracle supports at most 64 terminals");
    full_ = terminals_.size() == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << terminals_.size()) - 1;
    initial_.assign(g.vertex_count(), 0);
    for (std::size_t i = 0; i < terminals_.size(); ++i) {
      initial_[terminals_[i]] |= std::uint64_t{1} << i;
    }
  }

  // First labeling in search order with at most `budget` labels, if any.
  std::optional<std::vector<time_edge>> find(std::size_t budget, std::size_t workers) {
    struct branch {
      state k;
      std::vector<std::size_t> chosen;
      std::optional<std::size_t> last;
    };
    std::vector<branch> branches;
    if (complete(initial_)) return std::vector<time_edge>{};
    if (age_ < 1 || budget == 0 || !promising(initial_, 1, budget)) return std::nullopt;
    expand(initial_, 1, budget, std::nullopt,
           [&](const state& nk, const std::vector<std::size_t>& chosen,
               std::optional<std::size_t> last) {
             branches.push_back({nk, chosen, last});
             return false;
           });

    std::vector<std::optional<std::vector<time_edge>>> found(branches.size());
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || i > best.load()) return;
        const branch& b = branches[i];
        std::vector<time_edge> picked;
        for (std::size_t j : b.chosen) picked.push_back({1, edges_[j]});
        state k = b.k;
        cancel_guard guard{&best, i};
        if (dfs(k, 2, budget - b.chosen.size(), b.last, picked, guard)) {
          found[i] = std::move(picked);
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    workers = std::max<std::size_t>(1, std::min(workers, branches.size()));
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    std::size_t b = best.load();
    if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return found[b];
  }

 private:
  struct cancel_guard {
    const std::atomic<std::size_t>* best;
    std::size_t index;

    bool cancelled() const { return best->load(std::memory_order_relaxed) < index; }
  };

  bool complete(const state& k) const {
    for (vertex r : terminals_) {
      if (k[r] != full_) return false;
    }
    return true;
  }

  // Every missing (terminal, source) pair needs a knower within reach of the
  // remaining steps and labels; each label completes at most two terminals.
  bool promising(const state& k, time_label t, std::size_t budget_left) const {
    const std::size_t steps_left = static_cast<std::size_t>(age_ - t + 1);
    const std::size_t limit = std::min(steps_left, budget_left);
    std::size_t incomplete = 0;
    for (vertex r : terminals_) {
      std::uint64_t missing = full_ & ~k[r];
      if (!missing) continue;
      ++incomplete;
      while (missing) {
        const std::uint64_t bit = missing & (~missing + 1);
        missing ^= bit;
        std::size_t best = unreachable;
        for (vertex w = 0; w < k.size(); ++w) {
          if (k[w] & bit) best = std::min(best, dist_[w][r]);
        }
        if (best > limit) return false;
      }
    }
    return (incomplete + 1) / 2 <= budget_left;
  }

  static bool disjoint(const edge& a, const edge& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  }

  // Calls fn(next_state, chosen_edges, last_single) for each move at time t,
  // in search order; stops early when fn returns true.
  template <class Fn>
  bool expand(const state& k, time_label t, std::size_t budget_left,
              std::optional<std::size_t> last, Fn&& fn) const {
    std::vector<std::size_t> useful;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (k[edges_[j].u] != k[edges_[j].v]) useful.push_back(j);
    }
    const std::size_t steps_left = static_cast<std::size_t>(age_ - t + 1);
    std::vector<std::size_t> chosen;
    if (budget_left <= steps_left) {
      for (std::size_t j : useful) {
        if (last && j < *last && disjoint(edges_[j], edges_[*last])) continue;
        state nk = k;
        const edge& e = edges_[j];
        nk[e.u] = nk[e.v] = k[e.u] | k[e.v];
        chosen.assign(1, j);
        if (fn(nk, chosen, std::optional<std::size_t>{j})) return true;
      }
      return false;
    }
    if (useful.size() >= 32) throw instance_too_large_error();
    const std::uint32_t limit = std::uint32_t{1} << useful.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > budget_left) continue;
      state nk = k;
      chosen.clear();
      for (std::size_t b = 0; b < useful.size(); ++b) {
        if (!(mask >> b & 1U)) continue;
        const edge& e = edges_[useful[b]];
        nk[e.u] |= k[e.v];
        nk[e.v] |= k[e.u];
        chosen.push_back(useful[b]);
      }
      if (fn(nk, chosen, std::nullopt)) return true;
    }
    return false;
  }

  bool dfs(const state& k, time_label t, std::size_t budget_left, std::optional<std::size_t> last,
           std::vector<time_edge>& picked, const cancel_guard& guard) const {
    if (complete(k)) return true;
    if (t > age_ || budget_left == 0 || guard.cancelled()) return false;
    if (!promising(k, t, budget_left)) return false;
    return expand(k, t, budget_left, last,
                  [&](const state& nk, const std::vector<std::size_t>& chosen,
                      std::optional<std::size_t> nl) {
                    for (std::size_t j : chosen) picked.push_back({t, edges_[j]});
                    if (dfs(nk, t + 1, budget_left - chosen.size(), nl, picked, guard)) return true;
                    picked.resize(picked.size() - chosen.size());
                    return false;
                  });
  }

  std::vector<edge> edges_;
  std::vector<vertex> terminals_;
  time_label age_;
  std::vector<std::vector<std::size_t>> dist_;
  std::uint64_t full_ = 0;
  state initial_;
};

inline labeling to_labeling(const std::vector<time_edge>& picked) {
  labeling l;
  for (const time_edge& te : picked) l.add(te.e, te.time);
  return l;
}

inline void check_witness(const static_graph& g, const std::vector<vertex>& terminals,
                          const labeling& l, time_label age, std::size_t k) {
  auto rep = verify(temporal_graph(g, l), terminals, age, k);
  if (!rep.ok() || rep.label_count != k) throw error("internal: exact witness failed verification");
}

}  // namespace detail

// Minimum |lambda| making the terminals temporally R-connected with all labels
// in 1..a, by exhaustive iterative deepening over the label count.
inline exact_result exact_min_labels(const static_graph& g, const std::vector<vertex>& terminals_in,
                                     time_label a, const search_config& cfg = {}) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  require_connected(g);
  if (cfg.max_slots < 1) throw validation_error("max_slots must be >= 1");
  if (a >= 1 && g.edge_count() * static_cast<std::size_t>(a) > cfg.max_slots) {
    throw instance_too_large_error();
  }
  if (terminals.size() <= 1) return {};
  if (a < 1) throw infeasible_error();
  auto dist = all_pairs_distances(g);
  for (vertex r : terminals) {
    for (vertex s : terminals) {
      if (dist[r][s] > static_cast<std::size_t>(a)) throw infeasible_error();
    }
  }

  detail::labeling_search search(g, terminals, a);
  const std::size_t slots = g.edge_count() * static_cast<std::size_t>(a);
  for (std::size_t k = std::max<std::size_t>(1, cfg.budget_hint.value_or(1)); k <= slots; ++k) {
    if (auto picked = search.find(k, cfg.workers)) {
      exact_result res{picked->size(), detail::to_labeling(*picked)};
      detail::check_witness(g, terminals, res.witness, a, res.k_min);
      return res;
    }
  }
  throw infeasible_error();
}

// Same minimum without an age bound: k labels can always be compressed into
// ages 1..k, so round k searches with a = k. The slot cap applies per round.
inline exact_result exact_min_labels_any_age(const static_graph& g,
                                             const std::vector<vertex>& terminals_in,
                                             const search_config& cfg = {}) {
  auto terminals = normalized_terminals(g.vertex_count(), terminals_in);
  require_connected(g);
  if (terminals.size() <= 1) return {};
  for (std::size_t k = std::max<std::size_t>(1, cfg.budget_hint.value_or(1));; ++k) {
    if (g.edge_count() * k > cfg.max_slots) throw instance_too_large_error();
    const auto a = static_cast<time_label>(k);
    detail::labeling_search search(g, terminals, a);
    if (auto picked = search.find(k, cfg.workers)) {
      exact_result res{picked->size(), detail::to_labeling(*picked)};
      detail::check_witness(g, terminals, res.witness, a, res.k_min);
      return res;
    }
  }
}

// kappa(C_n, d) with d = floor(n/2): d^2 for even n, 2d^2 + d for odd n.
inline std::size_t kappa_cycle(std::size_t n) {
  if (n < 3) throw validation_error("cycle needs n >= 3");
  if (n == 4) {
    throw validation_error("no closed form for n = 4; use exact_min_labels or ml_optimum_size");
  }
  const std::size_t d = n / 2;
  return n % 2 == 0 ? d * d : 2 * d * d + d;
}

// C_n with edge i = {i, i+1 mod n}.
inline static_graph cycle_graph(std::size_t n) {
  if (n < 3) throw validation_error("cycle needs n >= 3");
  static_graph g(n);
  for (vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Odd n: every edge gets 1..d. Even n: edges alternate between the odd and the
// even labels up to d, starting with the odd ones on edge {0,1}.
inline temporal_graph cycle_labeling(std::size_t n) {
  kappa_cycle(n);
  const auto d = static_cast<time_label>(n / 2);
  labeling l;
  for (vertex i = 0; i < n; ++i) {
    edge e = make_edge(i, (i + 1) % n);
    for (time_label t = 1; t <= d; ++t) {
      if (n % 2 == 1 || (t % 2 == 1) == (i % 2 == 0)) l.add(e, t);
    }
  }
  return temporal_graph(cycle_graph(n), std::move(l));
}

// Union over v of the BFS tree of v, each tree edge to u labeled dist(v, u).
inline temporal_graph bfs_union_upper_bound(const static_graph& g) {
  require_connected(g);
  labeling l;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    auto f = detail::bfs_forest(g, {v});
    for (vertex u = 0; u < g.vertex_count(); ++u) {
      if (f.parent[u]) l.add(make_edge(u, *f.parent[u]), static_cast<time_label>(f.depth[u]));
    }
  }
  return temporal_graph(g, std::move(l));
}

}  // namespace tlab

#endif  // TLAB_EXACT_HPP
