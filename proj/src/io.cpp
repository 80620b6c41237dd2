#include "griddom/io.hpp"

#include <sstream>

namespace griddom {

Json decision_to_json(const Decision& d) {
  Json j;
  j["j"] = d.context.level;
  j["step"] = std::to_string(d.context.step);
  j["kind"] = std::string(to_string(d.context.kind));
  j["i"] = d.context.i ? Json(*d.context.i) : Json(nullptr);
  j["k"] = d.context.k;
  j["opt"] = std::string(1, to_char(d.choice));
  return j;
}

Decision decision_from_json(const Json& j) {
  Decision d;
  d.context.level = j.at("j").get<int>();
  const auto step = j.at("step").get<std::string>();
  if (step != "3" && step != "4") throw InputError("step must be \"3\" or \"4\"");
  d.context.step = step == "3" ? 3 : 4;
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "BOD" && kind != "BID") throw InputError("kind must be BOD or BID");
  d.context.kind = kind == "BOD" ? DecisionKind::Bod : DecisionKind::Bid;
  if (!j.at("i").is_null()) d.context.i = j.at("i").get<int>();
  d.context.k = j.at("k").get<int>();
  const auto opt = j.at("opt").get<std::string>();
  if (opt != "a" && opt != "b") throw InputError("opt must be a or b");
  d.choice = opt == "a" ? Choice::Alpha : Choice::Beta;
  return d;
}

Json solution_to_json(const PdsSolution& s) {
  Json j;
  j["m"] = s.dims.m;
  j["n"] = s.dims.rows();
  Json members = Json::array();
  for (const auto& v : s.vertices.vertices()) members.push_back({v.i, v.j});
  j["s"] = std::move(members);
  Json trace = Json::array();
  for (const auto& d : s.trace) trace.push_back(decision_to_json(d));
  j["trace"] = std::move(trace);
  return j;
}

PdsSolution solution_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  PdsSolution s{GridDims::finite(m, n), VertexSet(m, n), {}};
  for (const auto& v : j.at("s")) s.vertices.insert(v.at(0).get<int>(), v.at(1).get<int>());
  for (const auto& d : j.at("trace")) s.trace.push_back(decision_from_json(d));
  return s;
}

Json array_to_json(const PdsArray& a, int m, int n) {
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["r"] = a.r;
  j["s"] = a.s;
  j["delta"] = a.delta;
  Json rows = Json::array();
  for (const auto& line : a.entries) {
    Json row = Json::array();
    for (auto [x, y] : line) row.push_back({x, y});
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

PdsArray array_from_json(const Json& j) {
  PdsArray a;
  a.r = j.at("r").get<int>();
  a.s = j.at("s").get<int>();
  a.delta = j.at("delta").get<int>();
  for (const auto& row : j.at("entries")) {
    std::vector<std::pair<int, int>> line;
    for (const auto& e : row) line.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    a.entries.push_back(std::move(line));
  }
  return a;
}

Json report_to_json(const EnumerationReport& report, int m, const std::vector<int>& s_prime, int n_max) {
  Json j;
  j["m"] = m;
  j["s_prime"] = s_prime;
  j["n_max"] = n_max;
  j["nodes_expanded"] = report.nodes_expanded;
  j["max_depth"] = report.max_depth;
  Json counts = Json::object();
  for (auto [n, c] : count_by_n(report)) counts[std::to_string(n)] = c;
  j["counts"] = std::move(counts);
  Json sols = Json::array();
  for (const auto& e : report.solutions) {
    Json s = solution_to_json(e.solution);
    if (!e.other_traces.empty()) {
      Json others = Json::array();
      for (const auto& t : e.other_traces) {
        Json tj = Json::array();
        for (const auto& d : t) tj.push_back(decision_to_json(d));
        others.push_back(std::move(tj));
      }
      s["other_traces"] = std::move(others);
    }
    sols.push_back(std::move(s));
  }
  j["solutions"] = std::move(sols);
  return j;
}

Json graph_to_json(const TransitionGraph& g) {
  Json j;
  j["m"] = g.m;
  j["complete"] = g.complete;
  j["words"] = g.words;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    std::string choices;
    for (Choice c : e.choices) choices.push_back(to_char(c));
    edges.push_back({{"from", e.from}, {"to", e.to}, {"choices", choices}, {"thread", e.thread}});
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string render_text(const VertexSet& s, const std::vector<LabelRow>* labels) {
  std::ostringstream os;
  for (int j = 0; j < s.n(); ++j) {
    for (int i = 0; i < s.m(); ++i) {
      if (i) os << ' ';
      os << (s.contains(i, j) ? "●" : "○");
    }
    if (labels && j < static_cast<int>(labels->size())) os << "   " << (*labels)[static_cast<std::size_t>(j)].word();
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr int kStep = 24;
constexpr int kMargin = 24;

void svg_open(std::ostringstream& os, int width, int height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_rect(std::ostringstream& os, double x, double y, double w, double h, const char* fill) {
  os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\"" << fill
     << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
}

void svg_vertex(std::ostringstream& os, double x, double y, bool member) {
  os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << (member ? "black" : "white")
     << "\" stroke=\"black\"/>\n";
}

}  // namespace

std::string render_svg(const GridDims& dims, const VertexSet& s) {
  const int m = dims.m;
  const int n = dims.rows();
  const auto parts = decompose(direction_labels(dims, s));
  std::ostringstream os;
  // Augmented cells start one step outside the grid.
  svg_open(os, (m + 1) * kStep + 2 * kMargin, (n + 1) * kStep + 2 * kMargin);
  auto px = [](int cell) { return kMargin + (cell + 1) * kStep; };
  for (const auto& r : parts.rooms) svg_rect(os, px(r.x0), px(r.y0), r.width() * kStep, r.height() * kStep, "#f3d9a4");
  for (const auto& r : parts.ladders) {
    svg_rect(os, px(r.x0), px(r.y0), r.width() * kStep, r.height() * kStep, "#9cc3e6");
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) svg_vertex(os, px(i), px(j), s.contains(i, j));
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_window_text(const LatticeWindow& w) {
  std::ostringstream os;
  for (int q = -w.radius(); q < w.radius(); ++q) {
    for (int p = -w.radius(); p < w.radius(); ++p) {
      if (p > -w.radius()) os << ' ';
      os << (w.contains(p, q) ? "●" : "○");
    }
    os << '\n';
  }
  return os.str();
}

std::string render_window_svg(const LatticeWindow& w) {
  const int r = w.radius();
  const int side = 2 * r;
  std::ostringstream os;
  svg_open(os, side * kStep + 2 * kMargin, side * kStep + 2 * kMargin);
  auto px = [r](int p) { return kMargin + (p + r) * kStep + kStep / 2; };
  // Cells between four window vertices: rooms hold a member, ladders do not.
  for (int q = -r; q < r - 1; ++q) {
    for (int p = -r; p < r - 1; ++p) {
      const bool room = w.contains(p, q) || w.contains(p + 1, q) || w.contains(p, q + 1) || w.contains(p + 1, q + 1);
      svg_rect(os, px(p), px(q), kStep, kStep, room ? "#f3d9a4" : "#9cc3e6");
    }
  }
  for (int q = -r; q < r; ++q) {
    for (int p = -r; p < r; ++p) svg_vertex(os, px(p), px(q), w.contains(p, q));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace griddom
