#ifndef TLAB_REACH_HPP
#define TLAB_REACH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

// Foremost arrival time per vertex from one source. arrival[source] == 0;
// nullopt means unreached.
struct reach_report {
  vertex source = 0;
  std::vector<std::optional<time_label>> arrival;
  // Predecessor on a foremost path, recorded when arrival[v] is set.
  std::vector<std::optional<vertex>> predecessor;

  bool reached(vertex v) const { return arrival.at(v).has_value(); }

  std::size_t reached_count() const {
    return static_cast<std::size_t>(
        std::count_if(arrival.begin(), arrival.end(), [](const auto& a) { return a.has_value(); }));
  }
};

// One traversal step: from -> to at `time` over the edge {from,to} (or arc).
struct path_step {
  vertex from = 0;
  vertex to = 0;
  time_label time = 0;

  friend bool operator==(const path_step&, const path_step&) = default;
};

using temporal_path = std::vector<path_step>;

// Scans time-edges in ascending time order and relaxes y <- t whenever x was
// reached strictly before t. A strict-increasing walk can always be shortcut to
// a path arriving no later, so this computes path reachability.
template <class Graph>
reach_report foremost_arrivals(const basic_temporal_graph<Graph>& tg, vertex source) {
  const std::size_t n = tg.vertex_count();
  if (source >= n) {
    throw validation_error("source " + std::to_string(source) + " out of range");
  }
  reach_report r;
  r.source = source;
  r.arrival.assign(n, std::nullopt);
  r.predecessor.assign(n, std::nullopt);
  r.arrival[source] = 0;

  auto relax = [&](vertex x, vertex y, time_label t) {
    if (r.arrival[x] && *r.arrival[x] < t && !r.arrival[y]) {
      r.arrival[y] = t;
      r.predecessor[y] = x;
    }
  };
  // Within one time value relaxations cannot chain: a vertex set to t never
  // satisfies arrival < t, so processing order inside a time group is irrelevant.
  for (const time_edge& te : tg.time_edges()) {
    relax(te.e.u, te.e.v, te.time);
    if constexpr (!Graph::is_directed) relax(te.e.v, te.e.u, te.time);
  }
  return r;
}

// Reconstructs the foremost path recorded in the report, empty for the source.
inline std::optional<temporal_path> witness_path(const reach_report& r, vertex target) {
  if (!r.reached(target)) return std::nullopt;
  temporal_path path;
  for (vertex v = target; v != r.source; v = *r.predecessor[v]) {
    path.push_back({*r.predecessor[v], v, *r.arrival[v]});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Checks the temporal path invariants: consecutive steps chain, no vertex
// repeats, strictly increasing times, every time is a label of its edge.
template <class Graph>
bool is_valid_temporal_path(const basic_temporal_graph<Graph>& tg, const temporal_path& path) {
  if (path.empty()) return true;
  std::vector<vertex> seen{path.front().from};
  for (std::size_t i = 0; i < path.size(); ++i) {
    const path_step& s = path[i];
    if (i > 0 && (path[i - 1].to != s.from || path[i - 1].time >= s.time)) return false;
    if (!tg.graph().has_edge(s.from, s.to)) return false;
    if (!tg.labels().contains(tg.graph().key(s.from, s.to), s.time)) return false;
    if (std::find(seen.begin(), seen.end(), s.to) != seen.end()) return false;
    seen.push_back(s.to);
  }
  return true;
}

namespace detail {

template <class Graph>
void check_terminals(const basic_temporal_graph<Graph>& tg, const std::vector<vertex>& terminals) {
  for (vertex r : terminals) {
    if (r >= tg.vertex_count()) {
      throw validation_error("terminal " + std::to_string(r) + " out of range (n = " +
                             std::to_string(tg.vertex_count()) + ")");
    }
  }
}

}  // namespace detail

// Every ordered pair of distinct terminals is joined by a temporal path;
// intermediate vertices may be non-terminals.
template <class Graph>
bool is_r_connected(const basic_temporal_graph<Graph>& tg, const std::vector<vertex>& terminals) {
  detail::check_terminals(tg, terminals);
  if (terminals.size() <= 1) return true;
  for (vertex s : terminals) {
    auto r = foremost_arrivals(tg, s);
    for (vertex t : terminals) {
      if (!r.reached(t)) return false;
    }
  }
  return true;
}

template <class Graph>
bool is_temporally_connected(const basic_temporal_graph<Graph>& tg) {
  for (vertex s = 0; s < tg.vertex_count(); ++s) {
    if (foremost_arrivals(tg, s).reached_count() != tg.vertex_count()) return false;
  }
  return true;
}

inline std::vector<vertex> all_vertices(std::size_t n) {
  std::vector<vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

struct verify_report {
  bool r_connected = false;
  time_label age = 0;
  std::size_t label_count = 0;
  bool age_ok = true;
  bool budget_ok = true;

  bool ok() const noexcept { return r_connected && age_ok && budget_ok; }
};

// YES-instance check for ML/MAL/MSL/MASL: R-connectivity plus the optional
// age and budget bounds.
template <class Graph>
verify_report verify(const basic_temporal_graph<Graph>& tg, const std::vector<vertex>& terminals,
                     std::optional<time_label> age_bound = std::nullopt,
                     std::optional<std::size_t> budget = std::nullopt) {
  verify_report rep;
  rep.r_connected = is_r_connected(tg, terminals);
  rep.age = tg.age();
  rep.label_count = tg.label_count();
  rep.age_ok = !age_bound || rep.age <= *age_bound;
  rep.budget_ok = !budget || rep.label_count <= *budget;
  return rep;
}

}  // namespace tlab

#endif  // TLAB_REACH_HPP
