#ifndef TLAB_TEMPORAL_GRAPH_HPP
#define TLAB_TEMPORAL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"

namespace tlab {

using time_label = int;

// Edge -> strictly ascending positive labels. Keys are stored as given; the
// owning temporal graph checks they are edges of its host graph.
class labeling {
 public:
  using map_type = std::map<edge, std::vector<time_label>>;

  labeling() = default;

  void add(edge e, time_label t) {
    if (t < 1) throw validation_error("time-label must be >= 1, got " + std::to_string(t));
    auto& list = map_[e];
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it != list.end() && *it == t) return;
    list.insert(it, t);
    ++size_;
  }

  void add(edge e, std::initializer_list<time_label> ts) {
    for (time_label t : ts) add(e, t);
  }

  bool remove(edge e, time_label t) {
    auto found = map_.find(e);
    if (found == map_.end()) return false;
    auto& list = found->second;
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t) return false;
    list.erase(it);
    --size_;
    if (list.empty()) map_.erase(found);
    return true;
  }

  // Union with another labeling.
  void merge(const labeling& other) {
    for (const auto& [e, ts] : other.map_) {
      for (time_label t : ts) add(e, t);
    }
  }

  const std::vector<time_label>& labels_of(edge e) const {
    static const std::vector<time_label> empty;
    auto it = map_.find(e);
    return it == map_.end() ? empty : it->second;
  }

  bool contains(edge e, time_label t) const {
    const auto& list = labels_of(e);
    return std::binary_search(list.begin(), list.end(), t);
  }

  // |lambda|
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Largest label, 0 when empty.
  time_label age() const {
    time_label a = 0;
    for (const auto& [e, ts] : map_) a = std::max(a, ts.back());
    return a;
  }

  std::vector<edge> labeled_edges() const {
    std::vector<edge> out;
    out.reserve(map_.size());
    for (const auto& [e, ts] : map_) out.push_back(e);
    return out;
  }

  const map_type& entries() const noexcept { return map_; }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  friend bool operator==(const labeling& a, const labeling& b) { return a.map_ == b.map_; }

 private:
  map_type map_;
  std::size_t size_ = 0;
};

struct time_edge {
  time_label time = 0;
  edge e;

  friend auto operator<=>(const time_edge&, const time_edge&) = default;
};

// A host graph plus a labeling whose keys are edges of it. Immutable; the
// time-edges are kept sorted by (time, edge) for the reachability scan.
template <class Graph>
class basic_temporal_graph {
 public:
  using graph_type = Graph;

  basic_temporal_graph() = default;

  basic_temporal_graph(Graph g, labeling l) : graph_(std::move(g)), labels_(std::move(l)) {
    for (const auto& [e, ts] : labels_) {
      if (graph_.key(e.u, e.v) != e || !graph_.has_edge(e.u, e.v)) {
        throw validation_error("labeled pair " + to_string(e) + " is not an edge of the graph");
      }
      for (time_label t : ts) time_edges_.push_back({t, e});
    }
    std::sort(time_edges_.begin(), time_edges_.end());
  }

  const Graph& graph() const noexcept { return graph_; }
  const labeling& labels() const noexcept { return labels_; }
  const std::vector<time_edge>& time_edges() const noexcept { return time_edges_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t label_count() const noexcept { return labels_.size(); }
  time_label age() const { return labels_.age(); }

  friend bool operator==(const basic_temporal_graph& a, const basic_temporal_graph& b) {
    return a.graph_ == b.graph_ && a.labels_ == b.labels_;
  }

 private:
  Graph graph_;
  labeling labels_;
  std::vector<time_edge> time_edges_;
};

using temporal_graph = basic_temporal_graph<static_graph>;
using directed_temporal_graph = basic_temporal_graph<directed_graph>;

}  // namespace tlab

#endif  // TLAB_TEMPORAL_GRAPH_HPP
