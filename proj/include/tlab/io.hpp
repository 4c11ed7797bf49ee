#ifndef TLAB_IO_HPP
#define TLAB_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/temporal_graph.hpp"

namespace tlab {

// Line format:
//   # comment
//   problem <ml|mal|msl|masl>
//   n <int>
//   directed
//   terminals <ids...>
//   age <int>
//   budget <int>
//   e <u> <v>          (a <u> <v> when directed)
//   l <u> <v> : <t1> <t2> ...
struct instance_file {
  std::optional<std::string> problem;
  std::size_t n = 0;
  bool directed = false;
  std::optional<std::vector<vertex>> terminals;
  std::optional<time_label> age;
  std::optional<std::size_t> budget;
  std::vector<edge> edges;  // normalized, sorted
  labeling labels;

  static_graph graph() const {
    if (directed) throw validation_error("expected an undirected graph");
    static_graph g(n);
    for (const edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  directed_graph digraph() const {
    if (!directed) throw validation_error("expected a directed graph");
    directed_graph g(n);
    for (const edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  temporal_graph temporal() const { return temporal_graph(graph(), labels); }
  directed_temporal_graph directed_temporal() const {
    return directed_temporal_graph(digraph(), labels);
  }

  friend bool operator==(const instance_file&, const instance_file&) = default;
};

namespace detail {

template <class Int>
Int parse_int(std::size_t line, std::string_view tok, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw parse_error(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline instance_file parse_instance(std::string_view text) {
  instance_file f;
  bool have_n = false;
  std::vector<std::pair<std::size_t, edge>> label_keys;  // line, key
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto need_n = [&](std::size_t line) {
    if (!have_n) throw parse_error(line, "'n' header must come first");
  };
  auto vertex_id = [&](std::size_t line, std::string_view tok) {
    auto v = detail::parse_int<vertex>(line, tok, "vertex id");
    if (v >= f.n) throw parse_error(line, "vertex " + std::string(tok) + " out of range");
    return v;
  };

  std::vector<edge> raw_edges;
  std::set<edge> seen_edges;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    const std::string_view key = tok[0];

    if (key == "n") {
      if (have_n) throw parse_error(line_no, "duplicate 'n' header");
      if (tok.size() != 2) throw parse_error(line_no, "expected 'n <int>'");
      f.n = detail::parse_int<std::size_t>(line_no, tok[1], "vertex count");
      have_n = true;
    } else if (key == "directed") {
      need_n(line_no);
      if (tok.size() != 1) throw parse_error(line_no, "'directed' takes no arguments");
      if (!raw_edges.empty() || !label_keys.empty()) {
        throw parse_error(line_no, "'directed' must precede edge and label lines");
      }
      f.directed = true;
    } else if (key == "problem") {
      if (tok.size() != 2) throw parse_error(line_no, "expected 'problem <name>'");
      if (tok[1] != "ml" && tok[1] != "mal" && tok[1] != "msl" && tok[1] != "masl") {
        throw parse_error(line_no, "unknown problem '" + std::string(tok[1]) + "'");
      }
      f.problem = std::string(tok[1]);
    } else if (key == "terminals") {
      need_n(line_no);
      std::vector<vertex> ts;
      for (std::size_t i = 1; i < tok.size(); ++i) ts.push_back(vertex_id(line_no, tok[i]));
      f.terminals = std::move(ts);
    } else if (key == "age") {
      if (tok.size() != 2) throw parse_error(line_no, "expected 'age <int>'");
      f.age = detail::parse_int<time_label>(line_no, tok[1], "age");
    } else if (key == "budget") {
      if (tok.size() != 2) throw parse_error(line_no, "expected 'budget <int>'");
      f.budget = detail::parse_int<std::size_t>(line_no, tok[1], "budget");
    } else if (key == "e" || key == "a") {
      need_n(line_no);
      if ((key == "a") != f.directed) {
        throw parse_error(line_no, f.directed ? "use 'a' lines in a directed file"
                                              : "'a' lines need the 'directed' header");
      }
      if (tok.size() != 3) throw parse_error(line_no, "expected '" + std::string(key) + " <u> <v>'");
      vertex u = vertex_id(line_no, tok[1]);
      vertex v = vertex_id(line_no, tok[2]);
      if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
      edge e = f.directed ? edge{u, v} : make_edge(u, v);
      if (!seen_edges.insert(e).second) throw parse_error(line_no, "duplicate edge " + to_string(e));
      raw_edges.push_back(e);
    } else if (key == "l") {
      need_n(line_no);
      if (tok.size() < 4 || tok[3] != ":") throw parse_error(line_no, "expected 'l <u> <v> : <t>...'");
      vertex u = vertex_id(line_no, tok[1]);
      vertex v = vertex_id(line_no, tok[2]);
      edge e = f.directed ? edge{u, v} : make_edge(u, v);
      for (std::size_t i = 4; i < tok.size(); ++i) {
        auto t = detail::parse_int<time_label>(line_no, tok[i], "time-label");
        if (t < 1) throw parse_error(line_no, "time-label must be >= 1");
        if (f.labels.contains(e, t)) throw parse_error(line_no, "duplicate label " + std::to_string(t));
        f.labels.add(e, t);
      }
      label_keys.emplace_back(line_no, e);
    } else {
      throw parse_error(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_n) throw parse_error(line_no, "missing 'n' header");
  std::sort(raw_edges.begin(), raw_edges.end());
  f.edges = std::move(raw_edges);
  for (const auto& [line, e] : label_keys) {
    if (!seen_edges.count(e)) {
      throw parse_error(line, "labeled pair " + to_string(e) + " is not an edge");
    }
  }
  return f;
}

inline std::variant<static_graph, directed_graph> parse_graph(std::string_view text) {
  auto f = parse_instance(text);
  if (f.directed) return f.digraph();
  return f.graph();
}

inline std::string emit_labeling(const labeling& l) {
  std::ostringstream out;
  for (const auto& [e, ts] : l) {
    out << "l " << e.u << ' ' << e.v << " :";
    for (time_label t : ts) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

template <class Graph>
std::string emit_labeling(const basic_temporal_graph<Graph>& tg) {
  return emit_labeling(tg.labels());
}

inline std::string emit(const instance_file& f) {
  std::ostringstream out;
  if (f.problem) out << "problem " << *f.problem << '\n';
  out << "n " << f.n << '\n';
  if (f.directed) out << "directed\n";
  if (f.terminals) {
    out << "terminals";
    for (vertex v : *f.terminals) out << ' ' << v;
    out << '\n';
  }
  if (f.age) out << "age " << *f.age << '\n';
  if (f.budget) out << "budget " << *f.budget << '\n';
  const char key = f.directed ? 'a' : 'e';
  for (const edge& e : f.edges) out << key << ' ' << e.u << ' ' << e.v << '\n';
  out << emit_labeling(f.labels);
  return out.str();
}

template <class Graph>
instance_file to_instance(const Graph& g, labeling l = {}) {
  instance_file f;
  f.n = g.vertex_count();
  f.directed = Graph::is_directed;
  f.edges = g.edges();
  f.labels = std::move(l);
  return f;
}

}  // namespace tlab

#endif  // TLAB_IO_HPP
