#include "griddom/band.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace griddom {

GreedyOutcome greedy_band(const InitialCondition& initial, int row_cap) {
  GreedyOutcome out;
  const Strategy alpha = Strategy::all_alpha();
  Strategy::Cursor cursor(alpha);
  std::unordered_map<std::string, int> seen;
  out.rows.push_back(init_labels(initial));
  seen.emplace(out.rows.back().word(), 0);
  while (true) {
    if (static_cast<int>(out.rows.size()) >= row_cap) {
      throw CapExceeded("greedy run reached " + std::to_string(row_cap) + " rows");
    }
    const LabelRow* prev = out.rows.size() >= 2 ? &out.rows[out.rows.size() - 2] : nullptr;
    auto step = advance_level(out.rows.back(), prev, cursor);
    out.rows.push_back(std::move(step.next));
    const int j = static_cast<int>(out.rows.size()) - 1;
    if (tau(out.rows.back()) == 0) {
      out.kind = GreedyOutcome::Kind::Finite;
      out.solution = PdsSolution{GridDims::finite(initial.m(), j + 1), members_of(out.rows), {}};
      return out;
    }
    auto [it, fresh] = seen.emplace(out.rows.back().word(), j);
    if (!fresh) {
      out.kind = GreedyOutcome::Kind::Periodic;
      const int k = it->second;
      PeriodCertificate cert{alpha, k, j - k, {}};
      cert.slices.assign(out.rows.begin() + k, out.rows.begin() + j);
      out.rows.pop_back();
      out.period = std::move(cert);
      return out;
    }
  }
}

bool verify_period(const PeriodCertificate& cert, const LabelRow& seed) {
  if (cert.k < 0 || cert.length < 1 || static_cast<int>(cert.slices.size()) != cert.length) return false;
  std::vector<LabelRow> rows;
  try {
    rows = label_table_from(seed, cert.strategy, cert.k + cert.length + 1);
  } catch (const InputError&) {
    return false;
  }
  for (int t = 0; t < cert.length; ++t) {
    if (!(rows[static_cast<std::size_t>(cert.k + t)] == cert.slices[static_cast<std::size_t>(t)])) {
      return false;
    }
  }
  return rows[static_cast<std::size_t>(cert.k)] == rows[static_cast<std::size_t>(cert.k + cert.length)];
}

bool verify_period(const PeriodCertificate& cert, const InitialCondition& initial) {
  return verify_period(cert, init_labels(initial));
}

// ---------------------------------------------------------------------------
// Transition graph

std::optional<int> TransitionGraph::find(const std::string& word) const {
  auto it = index.find(word);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::vector<Choice>, LabelRow>> successors(const LabelRow& row) {
  std::vector<std::pair<std::vector<Choice>, LabelRow>> out;
  std::vector<std::vector<Choice>> stack{{}};
  while (!stack.empty()) {
    auto prefix = std::move(stack.back());
    stack.pop_back();
    std::size_t used = 0;
    auto res = advance_level(row, nullptr, [&](const DecisionView&) -> std::optional<Choice> {
      if (used < prefix.size()) return prefix[used++];
      return std::nullopt;
    });
    if (res.stalled) {
      auto beta = prefix;
      beta.push_back(Choice::Beta);
      prefix.push_back(Choice::Alpha);
      stack.push_back(std::move(beta));
      stack.push_back(std::move(prefix));
      continue;
    }
    out.emplace_back(std::move(prefix), std::move(res.next));
  }
  return out;
}

TransitionGraph build_transition_graph_from(const LabelRow& seed, std::size_t state_cap) {
  if (state_cap < 1) throw InputError("state_cap must be positive");
  TransitionGraph g;
  g.m = seed.size();
  auto add_node = [&g](const std::string& word, int parent_edge) {
    const int id = static_cast<int>(g.words.size());
    g.words.push_back(word);
    g.out.emplace_back();
    g.parent_edge.push_back(parent_edge);
    g.index.emplace(word, id);
    return id;
  };
  add_node(seed.word(), -1);

  // Depth-first: each frame holds a node's successor list and a cursor.
  struct Frame {
    int node;
    std::vector<std::pair<std::vector<Choice>, LabelRow>> next;
    std::size_t pos = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, successors(LabelRow::parse(g.words[0])), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.pos == top.next.size()) {
      stack.pop_back();
      continue;
    }
    auto& [choices, row] = top.next[top.pos++];
    const int from = top.node;
    const std::string word = row.word();
    const int edge_id = static_cast<int>(g.edges.size());
    if (auto known = g.find(word)) {
      g.edges.push_back({from, *known, choices, true});
      g.out[static_cast<std::size_t>(from)].push_back(edge_id);
      continue;
    }
    if (g.words.size() >= state_cap) {
      g.complete = false;
      break;
    }
    const int to = add_node(word, edge_id);
    g.edges.push_back({from, to, choices, false});
    g.out[static_cast<std::size_t>(from)].push_back(edge_id);
    stack.push_back({to, successors(row), 0});
  }
  return g;
}

TransitionGraph build_transition_graph(const InitialCondition& initial, std::size_t state_cap) {
  return build_transition_graph_from(init_labels(initial), state_cap);
}

namespace {

std::vector<int> depths(const TransitionGraph& g) {
  std::vector<int> depth(g.words.size(), 0);
  // Tree edges always point to nodes created later, so ids are topological.
  for (std::size_t v = 1; v < g.words.size(); ++v) {
    depth[v] = depth[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(g.parent_edge[v])].from)] + 1;
  }
  return depth;
}

int parent_of(const TransitionGraph& g, int v) {
  return g.edges[static_cast<std::size_t>(g.parent_edge[static_cast<std::size_t>(v)])].from;
}

bool is_ancestor(const TransitionGraph& g, const std::vector<int>& depth, int a, int v) {
  while (depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(a)]) v = parent_of(g, v);
  return v == a;
}

}  // namespace

std::vector<WalkStep> closed_walk(const TransitionGraph& g) {
  if (!g.complete) throw InputError("closed walk needs a complete transition graph");
  const auto depth = depths(g);
  std::vector<WalkStep> walk;
  int cur = 0;

  // Moves along the tree: up to the common ancestor, then down to `target`.
  auto travel = [&](int target) {
    int a = cur;
    int b = target;
    std::vector<int> down;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
      walk.push_back({WalkStep::Kind::Retrace, a, parent_of(g, a), g.parent_edge[static_cast<std::size_t>(a)]});
      a = parent_of(g, a);
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
      down.push_back(g.parent_edge[static_cast<std::size_t>(b)]);
      b = parent_of(g, b);
    }
    while (a != b) {
      walk.push_back({WalkStep::Kind::Retrace, a, parent_of(g, a), g.parent_edge[static_cast<std::size_t>(a)]});
      a = parent_of(g, a);
      down.push_back(g.parent_edge[static_cast<std::size_t>(b)]);
      b = parent_of(g, b);
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
      const auto& e = g.edges[static_cast<std::size_t>(*it)];
      walk.push_back({WalkStep::Kind::Tree, e.from, e.to, *it});
    }
    cur = target;
  };

  std::function<void(int)> visit = [&](int u) {
    for (int id : g.out[static_cast<std::size_t>(u)]) {
      const auto& e = g.edges[static_cast<std::size_t>(id)];
      travel(u);
      walk.push_back({e.thread ? WalkStep::Kind::Thread : WalkStep::Kind::Tree, e.from, e.to, id});
      cur = e.to;
      if (!e.thread) visit(e.to);
    }
  };
  visit(0);
  travel(0);
  return walk;
}

std::vector<std::string> walk_words(const TransitionGraph& g, const std::vector<WalkStep>& walk) {
  std::vector<std::string> out{g.words.front()};
  for (const auto& s : walk) out.push_back(g.words[static_cast<std::size_t>(s.to)]);
  return out;
}

std::vector<PeriodCertificate> thread_cycles(const TransitionGraph& g) {
  const auto depth = depths(g);
  std::vector<PeriodCertificate> out;
  for (const auto& e : g.edges) {
    if (!e.thread || !is_ancestor(g, depth, e.to, e.from)) continue;
    std::vector<int> path{};
    for (int v = e.from; v != e.to; v = parent_of(g, v)) path.push_back(g.parent_edge[static_cast<std::size_t>(v)]);
    std::reverse(path.begin(), path.end());
    std::vector<Choice> choices;
    PeriodCertificate cert;
    cert.slices.push_back(LabelRow::parse(g.words[static_cast<std::size_t>(e.to)]));
    for (int id : path) {
      const auto& t = g.edges[static_cast<std::size_t>(id)];
      choices.insert(choices.end(), t.choices.begin(), t.choices.end());
      cert.slices.push_back(LabelRow::parse(g.words[static_cast<std::size_t>(t.to)]));
    }
    choices.insert(choices.end(), e.choices.begin(), e.choices.end());
    cert.strategy = Strategy::explicit_sequence(std::move(choices));
    cert.k = 0;
    cert.length = static_cast<int>(cert.slices.size());
    out.push_back(std::move(cert));
  }
  return out;
}

std::string to_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "digraph transitions {\n";
  os << "  // solid: advance into a new row word; dashed: thread back to a known word\n";
  for (std::size_t v = 0; v < g.words.size(); ++v) {
    os << "  n" << v << " [label=\"" << g.words[v] << "\"" << (v == 0 ? ", shape=box" : "") << "];\n";
  }
  for (const auto& e : g.edges) {
    std::string label;
    for (Choice c : e.choices) label.push_back(to_char(c));
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (label.empty() ? "-" : label) << "\""
       << (e.thread ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace griddom
