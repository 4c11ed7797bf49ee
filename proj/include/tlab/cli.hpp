#ifndef TLAB_CLI_HPP
#define TLAB_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tlab/dag.hpp"
#include "tlab/error.hpp"
#include "tlab/exact.hpp"
#include "tlab/io.hpp"
#include "tlab/ml.hpp"
#include "tlab/reach.hpp"
#include "tlab/reductions.hpp"
#include "tlab/steiner.hpp"

namespace tlab {

enum exit_code : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_too_large = 3 };

namespace detail {

struct cli_options {
  std::string file;
  std::vector<vertex> terminals;
  std::optional<time_label> age;
  std::optional<std::size_t> budget;
  std::size_t max_slots = search_config{}.max_slots;
  std::size_t workers = 1;
  std::size_t cycle_n = 0;
  std::string from;
  std::size_t k = 0;
  std::vector<vertex> cover;
  std::vector<std::size_t> colors;
  std::vector<vertex> clique;
  std::string clauses;
  std::optional<std::size_t> random_n;
  std::string assign;
  std::uint64_t seed = 0;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw validation_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

// "0-1,2-3" -> clause list
inline xor3_formula parse_clauses(std::size_t n, const std::string& text) {
  xor3_formula f;
  f.n = n;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw validation_error("clause '" + item + "' is not of the form i-j");
    auto i = parse_int<std::size_t>(0, std::string_view(item).substr(0, dash), "variable");
    auto j = parse_int<std::size_t>(0, std::string_view(item).substr(dash + 1), "variable");
    f.clauses.emplace_back(i, j);
  }
  return f;
}

inline truth_assignment parse_assignment(const std::string& text) {
  truth_assignment tau;
  for (char c : text) {
    if (c == 'T' || c == 't' || c == '1') {
      tau.push_back(true);
    } else if (c == 'F' || c == 'f' || c == '0') {
      tau.push_back(false);
    } else {
      throw validation_error(std::string("assignment character '") + c + "' is not T/F/1/0");
    }
  }
  return tau;
}

inline std::vector<vertex> pick_terminals(const cli_options& o, const instance_file& f,
                                          bool default_all) {
  if (!o.terminals.empty()) return o.terminals;
  if (f.terminals) return *f.terminals;
  if (default_all) return all_vertices(f.n);
  throw validation_error("terminals required (--terminals or a 'terminals' line)");
}

inline void print_verify(std::ostream& out, const verify_report& rep) {
  out << "r_connected = " << yes_no(rep.r_connected) << '\n'
      << "age = " << rep.age << '\n'
      << "label_count = " << rep.label_count << '\n'
      << "age_ok = " << yes_no(rep.age_ok) << '\n'
      << "budget_ok = " << yes_no(rep.budget_ok) << '\n'
      << "result = " << (rep.ok() ? "ok" : "fail") << '\n';
}

inline int dispatch(const std::string& cmd, const cli_options& o, std::ostream& out,
                    std::istream& in) {
  search_config cfg;
  cfg.max_slots = o.max_slots;
  cfg.workers = o.workers;

  if (cmd == "cycle") {
    if (o.cycle_n == 4) {
      auto g = cycle_graph(4);
      auto res = exact_min_labels(g, all_vertices(4), 2, cfg);
      out << "# no closed form for n = 4; exact minimum at age 2\n"
          << "k = " << res.k_min << '\n'
          << emit(to_instance(g, res.witness));
      return exit_ok;
    }
    auto tg = cycle_labeling(o.cycle_n);
    out << "k = " << kappa_cycle(o.cycle_n) << '\n' << emit(to_instance(tg.graph(), tg.labels()));
    return exit_ok;
  }

  if (cmd == "reduce" && o.from == "xor3-mal") {
    xor3_formula phi;
    if (o.random_n) {
      phi = random_xor3_formula(*o.random_n, o.seed);
    } else {
      if (o.clauses.empty()) throw validation_error("xor3-mal needs --clauses or --random");
      std::size_t n = 0;
      for (auto [i, j] : parse_clauses(0, o.clauses).clauses) n = std::max({n, i + 1, j + 1});
      phi = parse_clauses(n, o.clauses);
    }
    auto inst = build_mal_instance(phi);
    labeling l;
    instance_file f = to_instance(inst.graph);
    f.problem = "mal";
    f.age = inst.age;
    if (!o.assign.empty()) {
      auto tau = parse_assignment(o.assign);
      f.budget = inst.budget(satisfied_clauses(phi, tau));
      f.labels = certificate_mal_labeling(inst, tau);
    }
    out << emit(f);
    return exit_ok;
  }

  const instance_file f = parse_instance(read_input(o.file, in));

  if (cmd == "ml") {
    auto l = ml_label(f.graph());
    out << "k = " << l.size() << '\n' << emit_labeling(l);
  } else if (cmd == "dag") {
    auto d = f.digraph();
    auto lay = canonical_layering(d);
    for (std::size_t i = 0; i < lay.layers.size(); ++i) {
      out << "layer " << i << ':';
      for (vertex v : lay.layers[i]) out << ' ' << v;
      out << '\n';
    }
    auto tg = dag_min_labeling(d);
    out << "k = " << tg.label_count() << '\n' << emit_labeling(tg);
  } else if (cmd == "msl") {
    if (o.terminals.empty() && !f.terminals) throw validation_error("msl requires --terminals");
    auto l = msl_label(f.graph(), pick_terminals(o, f, false));
    out << "k = " << l.size() << '\n' << emit_labeling(l);
  } else if (cmd == "mal-exact" || cmd == "masl-exact") {
    auto age = o.age ? o.age : f.age;
    if (!age) throw validation_error(cmd + " requires --age");
    auto terminals = cmd == "mal-exact" ? all_vertices(f.n) : pick_terminals(o, f, false);
    auto res = exact_min_labels(f.graph(), terminals, *age, cfg);
    out << "k = " << res.k_min << '\n' << emit_labeling(res.witness);
  } else if (cmd == "bound") {
    auto tg = bfs_union_upper_bound(f.graph());
    out << "k = " << tg.label_count() << '\n'
        << "age = " << tg.age() << '\n'
        << emit_labeling(tg);
  } else if (cmd == "verify") {
    auto terminals = pick_terminals(o, f, true);
    auto age = o.age ? o.age : f.age;
    auto budget = o.budget ? o.budget : f.budget;
    verify_report rep = f.directed ? verify(f.directed_temporal(), terminals, age, budget)
                                   : verify(f.temporal(), terminals, age, budget);
    print_verify(out, rep);
    return rep.ok() ? exit_ok : exit_failed;
  } else if (cmd == "reduce" && o.from == "vc-msl") {
    auto inst = build_msl_instance(f.graph(), o.k);
    instance_file r = to_instance(inst.graph);
    r.problem = "msl";
    r.terminals = inst.terminals;
    r.budget = inst.budget;
    if (!o.cover.empty()) r.labels = certificate_msl_labeling(inst, o.cover);
    out << emit(r);
  } else if (cmd == "reduce" && o.from == "mcc-masl") {
    if (o.colors.empty()) throw validation_error("mcc-masl requires --colors");
    auto inst = build_masl_instance(f.graph(), o.k, o.colors);
    instance_file r = to_instance(inst.graph);
    r.problem = "masl";
    r.terminals = inst.terminals;
    r.age = inst.age;
    r.budget = inst.budget;
    if (!o.clique.empty()) r.labels = certificate_masl_labeling(inst, o.clique);
    out << emit(r);
  } else {
    throw validation_error("unknown command");
  }
  return exit_ok;
}

}  // namespace detail

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 verification failed, 2 usage or input error, 3 instance too large or
// infeasible.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Minimum time-labelings of temporal graphs", "tlab"};
  app.require_subcommand(1);
  detail::cli_options o;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "instance file, '-' for stdin")->required();
  };
  auto terminals_arg = [&](CLI::App* sub) {
    sub->add_option("--terminals", o.terminals, "terminal ids (comma separated)")->delimiter(',');
  };
  auto search_args = [&](CLI::App* sub) {
    sub->add_option("--age", o.age, "age bound");
    sub->add_option("--max-slots", o.max_slots, "cap on |E| * age")->check(CLI::PositiveNumber);
    sub->add_option("--workers", o.workers, "search threads")->check(CLI::PositiveNumber);
  };

  auto* ml = app.add_subcommand("ml", "optimal labeling for temporal connectivity");
  file_arg(ml);
  auto* dag = app.add_subcommand("dag", "canonical layering and minimum DAG labeling");
  file_arg(dag);
  auto* msl = app.add_subcommand("msl", "optimal Steiner labeling");
  file_arg(msl);
  terminals_arg(msl);
  auto* mal_exact = app.add_subcommand("mal-exact", "exact minimum with an age bound");
  file_arg(mal_exact);
  search_args(mal_exact);
  auto* masl_exact = app.add_subcommand("masl-exact", "exact Steiner minimum with an age bound");
  file_arg(masl_exact);
  terminals_arg(masl_exact);
  search_args(masl_exact);
  auto* cycle = app.add_subcommand("cycle", "closed form and labeling for a cycle");
  cycle->add_option("--n", o.cycle_n, "cycle length")->required();
  auto* bound = app.add_subcommand("bound", "BFS-union upper bound labeling");
  file_arg(bound);
  auto* verify_cmd = app.add_subcommand("verify", "check a labeled instance");
  file_arg(verify_cmd);
  terminals_arg(verify_cmd);
  verify_cmd->add_option("--age", o.age, "age bound");
  verify_cmd->add_option("--budget", o.budget, "label budget");
  auto* reduce = app.add_subcommand("reduce", "generate a reduction instance");
  reduce->add_option("--from", o.from, "source problem")
      ->required()
      ->check(CLI::IsMember({"xor3-mal", "vc-msl", "mcc-masl"}));
  reduce->add_option("file", o.file, "source graph (vc-msl, mcc-masl)");
  reduce->add_option("--k", o.k, "cover size or color count");
  reduce->add_option("--cover", o.cover, "vertex cover for the certificate")->delimiter(',');
  reduce->add_option("--colors", o.colors, "color of every vertex")->delimiter(',');
  reduce->add_option("--clique", o.clique, "multicolored clique for the certificate")->delimiter(',');
  reduce->add_option("--clauses", o.clauses, "clauses as i-j pairs, comma separated");
  reduce->add_option("--random", o.random_n, "random formula on this many variables");
  reduce->add_option("--assign", o.assign, "truth assignment, one T/F per variable");
  reduce->add_option("--seed", o.seed, "seed for --random");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "reduce" && o.from != "xor3-mal" && o.file.empty()) {
      throw validation_error("reduce --from " + o.from + " needs a source graph file");
    }
    return detail::dispatch(cmd, o, out, in);
  } catch (const instance_too_large_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_too_large;
  } catch (const infeasible_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_too_large;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace tlab

#endif  // TLAB_CLI_HPP
