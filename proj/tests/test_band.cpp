#include <doctest.h>

#include <cmath>
#include <set>

#include "griddom/band.hpp"
#include "griddom/tpc.hpp"
#include "helpers.hpp"

using namespace griddom;
using testing_support::to_cells;
using testing_support::words;

TEST_CASE("greedy run for m = 3, top column {0}") {
  const InitialCondition initial(3, {0});
  const auto out = greedy_band(initial, 100);
  REQUIRE(out.kind == GreedyOutcome::Kind::Finite);
  CHECK(words(out.rows) == std::vector<std::string>{"230", "412"});
  REQUIRE(out.solution);
  const auto cells = to_cells(out.solution->vertices);
  CHECK(cells == oracle::CellSet{{0, 0}, {2, 1}});
  CHECK(oracle::is_pds(cells, 3, 2));
}

TEST_CASE("greedy runs end within the pigeonhole bound for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& initial : all_iavs(m)) {
      const auto out = greedy_band(initial, static_cast<int>(std::pow(5, m)) + 2);
      CHECK(out.rows.size() < std::pow(5, m) + 2);
    }
  }
}

TEST_CASE("greedy agrees with the all-alpha run") {
  for (int m = 1; m <= 8; ++m) {
    for (const auto& initial : all_iavs(m)) {
      const auto g = greedy_band(initial, 1000);
      const auto t = run_theta(initial, Strategy::all_alpha(), static_cast<int>(g.rows.size()));
      REQUIRE(t.rows.size() <= g.rows.size());
      for (std::size_t j = 0; j < t.rows.size(); ++j) REQUIRE(t.rows[j] == g.rows[j]);
      if (g.kind == GreedyOutcome::Kind::Finite) {
        REQUIRE(t.status == ThetaOutcome::Status::Pds);
        CHECK(g.solution->vertices == t.solution->vertices);
      } else {
        CHECK(verify_period(*g.period, initial));
      }
    }
  }
}

TEST_CASE("periodic greedy runs first appear at m = 15") {
  std::size_t periodic = 0;
  for (const auto& initial : all_iavs(15)) {
    const auto g = greedy_band(initial, 100000);
    if (g.kind != GreedyOutcome::Kind::Periodic) continue;
    ++periodic;
    CHECK(verify_period(*g.period, initial));
    auto bad = *g.period;
    bad.length += 1;
    bad.slices.clear();
    CHECK_FALSE(verify_period(bad, initial));
    for (const auto& r : g.rows) CHECK(tau(r) > 0);
  }
  CHECK(periodic > 0);
}

TEST_CASE("gamma period certificates hold for the code seeds") {
  for (int m = 2; m <= 10; m += 2) {
    const auto table = gamma_table(m);
    PeriodCertificate cert{gamma_strategy(), 0, m + 1, {table.begin(), table.end() - 1}};
    CHECK(verify_period(cert, tpc_seed(m)));
    cert.length = m + 2;
    cert.slices.clear();
    CHECK_FALSE(verify_period(cert, tpc_seed(m)));
  }
}

TEST_CASE("successors cover every one-level continuation") {
  // Each successor's member rows are exactly the slices the oracle allows
  // below a fixed pair of rows.
  const auto row = LabelRow::parse("0412", 1);
  const auto next = successors(row);
  REQUIRE(next.size() >= 2);
  CHECK(std::is_sorted(next.begin(), next.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; }));
  std::set<std::string> distinct;
  for (const auto& [choices, r] : next) distinct.insert(r.word());
  CHECK(distinct.size() == next.size());
}

TEST_CASE("transition graphs and closed walks") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& initial : all_iavs(m)) {
      const auto g = build_transition_graph(initial);
      REQUIRE(g.complete);
      CHECK(g.words.front() == init_labels(initial).word());
      const auto walk = closed_walk(g);
      REQUIRE_FALSE(walk.empty());
      CHECK(walk.front().from == 0);
      CHECK(walk.back().to == 0);
      for (std::size_t t = 1; t < walk.size(); ++t) CHECK(walk[t].from == walk[t - 1].to);
      const auto visited = walk_words(g, walk);
      CHECK(std::set<std::string>(visited.begin(), visited.end()) ==
            std::set<std::string>(g.words.begin(), g.words.end()));
      std::set<int> edges;
      for (const auto& s : walk) {
        if (s.kind != WalkStep::Kind::Retrace) edges.insert(s.edge);
      }
      CHECK(edges.size() == g.edges.size());
      for (const auto& cert : thread_cycles(g)) CHECK(verify_period(cert, cert.slices.front()));
    }
  }
}

TEST_CASE("transition graph edges replay through advance_level") {
  const auto g = build_transition_graph(InitialCondition(4, {1}));
  for (const auto& e : g.edges) {
    std::size_t used = 0;
    const auto choose = [&](const DecisionView&) -> std::optional<Choice> {
      return used < e.choices.size() ? std::optional<Choice>(e.choices[used++]) : std::nullopt;
    };
    const auto r = advance_level(LabelRow::parse(g.words[static_cast<std::size_t>(e.from)]), nullptr, choose);
    CHECK_FALSE(r.stalled);
    CHECK(r.next.word() == g.words[static_cast<std::size_t>(e.to)]);
  }
  // The three-level completion below 1230 is reachable.
  CHECK(g.find("2312").has_value());
  CHECK(g.find("0412").has_value());
}

TEST_CASE("capped graphs are incomplete and refuse a walk") {
  const auto g = build_transition_graph(InitialCondition(6, {2}), 3);
  CHECK_FALSE(g.complete);
  CHECK_THROWS_AS(closed_walk(g), InputError);
}

TEST_CASE("a single cycle is walked once") {
  TransitionGraph g;
  g.m = 1;
  g.words = {"0", "1", "2"};
  g.edges = {{0, 1, {}, false}, {1, 2, {}, false}, {2, 0, {}, true}};
  g.out = {{0}, {1}, {2}};
  g.parent_edge = {-1, 0, 1};
  for (int v = 0; v < 3; ++v) g.index[g.words[static_cast<std::size_t>(v)]] = v;
  const auto walk = closed_walk(g);
  REQUIRE(walk.size() == 3);
  CHECK(walk[0].kind == WalkStep::Kind::Tree);
  CHECK(walk[1].kind == WalkStep::Kind::Tree);
  CHECK(walk[2].kind == WalkStep::Kind::Thread);
  CHECK(walk[2].to == 0);
}

TEST_CASE("DOT export marks threads dashed") {
  const auto g = build_transition_graph(InitialCondition(3, {0}));
  const auto dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}
