// Command-line front end: griddom <subcommand> [options]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "griddom/band.hpp"
#include "griddom/codec.hpp"
#include "griddom/core.hpp"
#include "griddom/figures.hpp"
#include "griddom/io.hpp"
#include "griddom/search.hpp"
#include "griddom/theta.hpp"
#include "griddom/tpc.hpp"

#ifndef GRIDDOM_GOLDEN_DIR
#define GRIDDOM_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace griddom;

constexpr int kExitInput = 2;
constexpr int kExitStalled = 3;
constexpr int kExitRunning = 4;

std::vector<int> parse_columns(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("column list must be comma-separated integers: " + text);
    }
  }
  return out;
}

// Writes to --out when given, standard output otherwise.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string solution_text(const PdsSolution& s, const std::vector<LabelRow>* labels) {
  std::ostringstream os;
  os << "PDS in grid " << s.dims.m << "x" << s.dims.rows() << " with " << s.vertices.size() << " vertices\n";
  os << render_text(s.vertices, labels);
  if (!s.trace.empty()) os << "trace\n" << format_trace(s.trace);
  return os.str();
}

struct Options {
  int m = 0;
  int n = 0;
  std::string columns;
  std::string strategy = "alpha";
  int max_rows = 0;
  int rows = 0;
  int n_max = 0;
  int workers = 1;
  std::string format = "text";
  std::string out;
  std::string dot;
  bool walk = false;
  bool greedy = false;
  bool search = false;
  std::size_t cap = kDefaultStateCap;
  std::string shape = "TallPlus2";
  int radius = 12;
  std::string svg;
  std::string which;
  std::string golden_dir = GRIDDOM_GOLDEN_DIR;
  int oracle_cap = 0;
};

int cmd_check(const Options& o) {
  const auto cols = parse_columns(o.columns);
  const auto c = classify_initial(o.m, cols);
  std::cout << to_string(c);
  if (c == InitialClass::Iavs || c == InitialClass::Complete) std::cout << ", f(H0)=" << seed_labels(o.m, cols).word();
  std::cout << '\n';
  return c == InitialClass::Inadmissible ? kExitInput : 0;
}

int cmd_run(const Options& o) {
  const InitialCondition initial(o.m, parse_columns(o.columns));
  const auto strategy = Strategy::parse(o.strategy);
  const int max_rows = o.max_rows > 0 ? o.max_rows : default_max_rows(o.m);
  const auto outcome = run_theta(initial, strategy, max_rows);
  if (outcome.status == ThetaOutcome::Status::Stalled) {
    std::cerr << "stalled: " << outcome.reason << '\n';
    std::cerr << render_text(members_of(outcome.rows), &outcome.rows) << format_trace(outcome.trace);
    return kExitStalled;
  }
  if (outcome.status == ThetaOutcome::Status::Running) {
    std::cerr << "no completion within " << max_rows << " rows\n";
    std::cerr << render_text(members_of(outcome.rows), &outcome.rows) << format_trace(outcome.trace);
    return kExitRunning;
  }
  const auto& sol = *outcome.solution;
  if (o.format == "json") {
    emit(solution_to_json(sol).dump(2) + "\n", o.out);
  } else if (o.format == "svg") {
    emit(render_svg(sol.dims, sol.vertices), o.out);
  } else {
    emit(solution_text(sol, &outcome.rows), o.out);
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto cols = parse_columns(o.columns);
  const InitialCondition initial(o.m, cols);
  const int n_max = o.n_max > 0 ? o.n_max : default_max_rows(o.m);
  const auto report = enumerate_all(initial, n_max, {o.workers, true});
  if (o.format == "json") {
    emit(report_to_json(report, o.m, initial.columns(), n_max).dump(2) + "\n", o.out);
    return 0;
  }
  std::ostringstream os;
  os << "solutions " << report.solutions.size() << ", nodes expanded " << report.nodes_expanded
     << ", max depth " << report.max_depth << '\n';
  for (auto [n, c] : count_by_n(report)) os << "n=" << n << ": " << c << '\n';
  for (const auto& e : report.solutions) os << '\n' << solution_text(e.solution, nullptr);
  emit(os.str(), o.out);
  return 0;
}

int cmd_band(const Options& o) {
  const InitialCondition initial(o.m, parse_columns(o.columns));
  std::ostringstream os;
  if (o.greedy) {
    const auto g = greedy_band(initial, 1 << 20);
    if (g.kind == GreedyOutcome::Kind::Finite) {
      os << "greedy: finite\n" << solution_text(*g.solution, &g.rows);
    } else {
      os << "greedy: periodic from level " << g.period->k << " with period " << g.period->length << '\n';
      for (const auto& r : g.rows) os << r.word() << '\n';
    }
  }
  const auto graph = build_transition_graph(initial, o.cap);
  std::size_t threads = 0;
  for (const auto& e : graph.edges) threads += e.thread ? 1 : 0;
  os << "transition graph: " << graph.words.size() << " words, " << graph.edges.size() - threads << " tree edges, "
     << threads << " threads" << (graph.complete ? "" : " (incomplete: state cap reached)") << '\n';
  if (o.walk) {
    const auto walk = closed_walk(graph);
    os << "closed walk: " << walk.size() << " steps\n";
    for (const auto& s : walk) {
      const char* kind = s.kind == WalkStep::Kind::Tree ? "tree" : s.kind == WalkStep::Kind::Thread ? "thread" : "back";
      os << kind << ' ' << graph.words[static_cast<std::size_t>(s.from)] << " -> "
         << graph.words[static_cast<std::size_t>(s.to)] << '\n';
    }
  }
  if (!o.dot.empty()) emit(to_dot(graph), o.dot);
  if (o.format == "json") {
    emit(graph_to_json(graph).dump(2) + "\n", o.out);
  } else {
    emit(os.str(), o.out);
  }
  return 0;
}

int cmd_array(const Options& o) {
  const InitialCondition initial(o.m, parse_columns(o.columns));
  const auto strategy = Strategy::parse(o.strategy);
  std::vector<LabelRow> rows;
  if (o.rows > 0) {
    rows = label_table(initial, strategy, o.rows);
  } else {
    const auto outcome = run_theta(initial, strategy, o.max_rows > 0 ? o.max_rows : default_max_rows(o.m));
    if (outcome.status != ThetaOutcome::Status::Pds) {
      std::cerr << "run did not complete (" << to_string(outcome.status) << ")\n";
      return outcome.status == ThetaOutcome::Status::Stalled ? kExitStalled : kExitRunning;
    }
    rows = outcome.rows;
  }
  const auto dims = GridDims::finite(o.m, static_cast<int>(rows.size()));
  const auto s = members_of(rows);
  const auto a = to_pds_array(dims, s);
  if (o.format == "json") {
    emit(array_to_json(a, dims.m, dims.rows()).dump(2) + "\n", o.out);
  } else if (o.format == "svg") {
    emit(render_svg(dims, s), o.out);
  } else {
    std::ostringstream os;
    os << "A(" << dims.m << ',' << dims.rows() << ',' << a.r << ',' << a.s << ',' << a.delta << ")\n"
       << format_array(a);
    emit(os.str(), o.out);
  }
  return 0;
}

int cmd_tpc(const Options& o) {
  const auto code = build_tpc(o.m, parse_tpc_shape(o.shape));
  const auto& sol = code.solution;
  if (o.format == "json") {
    emit(solution_to_json(sol).dump(2) + "\n", o.out);
  } else if (o.format == "array") {
    emit(format_array(to_pds_array(sol.dims, sol.vertices)), o.out);
  } else if (o.format == "svg") {
    emit(render_svg(sol.dims, sol.vertices), o.out);
  } else {
    std::ostringstream os;
    os << to_string(code.shape) << ": total perfect code in grid " << sol.dims.m << "x" << sol.dims.rows() << '\n'
       << render_text(sol.vertices, &code.table);
    emit(os.str(), o.out);
  }
  return 0;
}

int cmd_kg(const Options& o) {
  const bool predicted = kg_has_tpc(o.m, o.n);
  std::cout << "predicate: " << (predicted ? "TPC exists" : "no TPC") << '\n';
  if (o.search) {
    const bool found = search_has_tpc(o.m, o.n);
    std::cout << "search: " << (found ? "TPC exists" : "no TPC") << '\n';
    return found == predicted ? 0 : 1;
  }
  return 0;
}

int cmd_s1(const Options& o) {
  const auto w = build_s1(o.radius);
  if (!o.svg.empty()) emit(render_window_svg(w), o.svg);
  std::ostringstream os;
  if (o.format == "text") os << render_window_text(w);
  os << "interior total perfect code: " << (w.interior_is_tpc() ? "yes" : "no") << '\n';
  os << "symmetries:";
  for (auto s : symmetry_group(w)) os << ' ' << to_string(s);
  os << '\n';
  const auto [cw, ch] = central_ladder(w);
  os << "central ladder: " << cw << 'x' << ch << '\n';
  int preserved = 0;
  for (int t = 1; t <= o.radius / 2; ++t) {
    preserved += preserved_by_translation(w, t, 0) + preserved_by_translation(w, 0, t);
  }
  os << "translations preserving membership (|t| <= " << o.radius / 2 << "): " << preserved << '\n';
  emit(os.str(), o.out);
  return 0;
}

int cmd_figures(const Options& o) {
  const std::string actual = generate_figure(o.which);
  const std::string path = o.golden_dir + "/" + o.which + ".txt";
  const std::string expected = read_file(path);
  const std::string diff = unified_diff(expected, actual, path, o.which + " (generated)");
  if (!diff.empty()) {
    std::cout << diff;
    return 1;
  }
  std::cout << o.which << ": identical to " << path << '\n';
  return 0;
}

int cmd_oracle(const Options& o) {
  const auto dims = GridDims::finite(o.m, o.n);
  std::optional<TopConstraint> top;
  if (!o.columns.empty()) top = TopConstraint{parse_columns(o.columns)};
  const int cap = o.oracle_cap > 0 ? o.oracle_cap : oracle_cap_from_env();
  const auto sets = oracle_enumerate(dims, top, cap);
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& s : sets) j.push_back(solution_to_json(PdsSolution{dims, s, {}}));
    emit(j.dump(2) + "\n", o.out);
    return 0;
  }
  std::ostringstream os;
  os << sets.size() << " perfect dominating sets\n";
  for (const auto& s : sets) os << '\n' << render_text(s);
  emit(os.str(), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect dominating sets in grid and band graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_initial = [&o](CLI::App* c) {
    c->add_option("--m", o.m, "number of columns")->required();
    c->add_option("--s,--s-prime", o.columns, "top-row columns, comma-separated, 0-based");
  };
  auto add_format = [&o](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    c->add_option("--out", o.out, "write the output to this file");
  };

  auto* check = app.add_subcommand("check", "classify a top-row column set");
  add_initial(check);

  auto* run = app.add_subcommand("run", "run the continuation algorithm under one strategy");
  add_initial(run);
  run->add_option("--strategy", o.strategy, "alpha, beta, gamma or a word over {a,b}");
  run->add_option("--max-rows", o.max_rows, "level limit (default 4m)");
  add_format(run, {"text", "json", "svg"});

  auto* enumerate = app.add_subcommand("enumerate", "all solutions up to a height");
  add_initial(enumerate);
  enumerate->add_option("--n-max", o.n_max, "largest height (default 4m)");
  enumerate->add_option("--workers", o.workers, "parallel workers")->check(CLI::PositiveNumber);
  add_format(enumerate, {"text", "json"});

  auto* band = app.add_subcommand("band", "transition graph of the band graph");
  add_initial(band);
  band->add_option("--dot", o.dot, "write the graph in DOT format to this file");
  band->add_flag("--walk", o.walk, "print the closed walk");
  band->add_flag("--greedy", o.greedy, "also run the greedy strategy");
  band->add_option("--cap", o.cap, "maximum number of row words");
  add_format(band, {"text", "json"});

  auto* array = app.add_subcommand("array", "room/ladder array of a run's solution");
  add_initial(array);
  array->add_option("--strategy", o.strategy, "alpha, beta, gamma or a word over {a,b}");
  array->add_option("--rows", o.rows, "take exactly this many levels instead of stopping at completion");
  array->add_option("--max-rows", o.max_rows, "level limit (default 4m)");
  add_format(array, {"text", "json", "svg"});

  auto* tpc = app.add_subcommand("tpc", "construct a total perfect code");
  tpc->add_option("--m", o.m, "even number of columns")->required();
  tpc->add_option("--shape", o.shape, "TallPlus2, Square, SquareRotated, SquareExtra or ShortMinus2");
  add_format(tpc, {"text", "json", "array", "svg"});

  auto* kg = app.add_subcommand("kg", "total perfect code existence predicate");
  kg->add_option("--m", o.m, "number of columns")->required();
  kg->add_option("--n", o.n, "number of rows")->required();
  kg->add_flag("--search", o.search, "confirm by exhaustive search");

  auto* s1 = app.add_subcommand("s1", "window of the lattice total perfect code");
  s1->add_option("--radius", o.radius, "half side of the window")->check(CLI::Range(2, 64));
  s1->add_option("--svg", o.svg, "write an SVG drawing to this file");
  add_format(s1, {"text", "summary"});

  auto* figures = app.add_subcommand("figures", "regenerate reference data and diff against golden files");
  figures->add_option("which", o.which, "fig1, fig2, fig3 or arrays")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "arrays"}));
  figures->add_option("--golden-dir", o.golden_dir, "directory holding <which>.txt");

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration");
  oracle->add_option("--m", o.m, "number of columns")->required();
  oracle->add_option("--n", o.n, "number of rows")->required();
  oracle->add_option("--s,--s-prime", o.columns, "required top-row columns");
  oracle->add_option("--cap", o.oracle_cap, "largest m*n (default 30 or GRIDDOM_MAX_ORACLE)");
  add_format(oracle, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (run->parsed()) return cmd_run(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (band->parsed()) return cmd_band(o);
    if (array->parsed()) return cmd_array(o);
    if (tpc->parsed()) return cmd_tpc(o);
    if (kg->parsed()) return cmd_kg(o);
    if (s1->parsed()) return cmd_s1(o);
    if (figures->parsed()) return cmd_figures(o);
    if (oracle->parsed()) return cmd_oracle(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
  return 0;
}
