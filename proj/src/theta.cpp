#include "griddom/theta.hpp"

#include <sstream>

namespace griddom {

Choice gamma_choice(const DecisionView& view) {
  const auto& ctx = view.context;
  const int start = ctx.step == 3 ? 0 : *ctx.i + 1;
  const int run = ctx.k - start;
  const bool open_above = view.previous == nullptr || (*view.previous)[start] == kBelow;
  return run == 1 && open_above ? Choice::Alpha : Choice::Beta;
}

// ---------------------------------------------------------------------------
// Strategy

Strategy Strategy::explicit_sequence(std::vector<Choice> choices) {
  Strategy s;
  s.kind_ = Kind::Explicit;
  s.sequence_ = std::move(choices);
  return s;
}

Strategy Strategy::all_alpha() { return Strategy(); }

Strategy Strategy::all_beta() {
  Strategy s;
  s.kind_ = Kind::AllBeta;
  return s;
}

Strategy Strategy::gamma() {
  Strategy s;
  s.kind_ = Kind::Gamma;
  return s;
}

Strategy Strategy::callback(Callback fn) {
  if (!fn) throw InputError("empty strategy callback");
  Strategy s;
  s.kind_ = Kind::Callback;
  s.callback_ = std::move(fn);
  return s;
}

Strategy Strategy::parse(std::string_view text) {
  if (text == "alpha") return all_alpha();
  if (text == "beta") return all_beta();
  if (text == "gamma") return gamma();
  std::vector<Choice> seq;
  for (char c : text) {
    if (c == 'a') {
      seq.push_back(Choice::Alpha);
    } else if (c == 'b') {
      seq.push_back(Choice::Beta);
    } else if (c != ',' && c != ' ') {
      throw InputError("strategy must be alpha, beta, gamma or a word over {a,b}: " +
                       std::string(text));
    }
  }
  return explicit_sequence(std::move(seq));
}

std::string Strategy::describe() const {
  switch (kind_) {
    case Kind::Explicit: {
      std::string out;
      for (Choice c : sequence_) out.push_back(to_char(c));
      return out;
    }
    case Kind::AllAlpha: return "alpha";
    case Kind::AllBeta: return "beta";
    case Kind::Gamma: return "gamma";
    case Kind::Callback: return "callback";
  }
  return "?";
}

std::optional<Choice> Strategy::Cursor::next(const DecisionView& view) {
  const Strategy& s = *strategy_;
  std::optional<Choice> out;
  switch (s.kind_) {
    case Kind::Explicit:
      if (consumed_ < s.sequence_.size()) out = s.sequence_[consumed_];
      break;
    case Kind::AllAlpha: out = Choice::Alpha; break;
    case Kind::AllBeta: out = Choice::Beta; break;
    case Kind::Gamma: out = gamma_choice(view); break;
    case Kind::Callback: out = s.callback_(view); break;
  }
  if (out) ++consumed_;
  return out;
}

// ---------------------------------------------------------------------------
// Advance

LabelRow init_labels(const InitialCondition& initial) {
  return seed_labels(initial.m(), initial.columns());
}

AdvanceResult advance_level(const LabelRow& row, const LabelRow* previous, const Chooser& choose) {
  const int m = row.size();
  const LabelRow& f = row;
  AdvanceResult result;
  result.next = LabelRow::zeros(m, row.level() + 1);
  LabelRow& g = result.next;

  // Step 1: every 0 on the source level is a vertex dominated from below, so
  // the vertex under it joins S and its new neighbours get their labels.
  for (int i = 0; i < m; ++i) {
    if (f[i] != kBelow) continue;
    if (i > 0 && f[i - 1] != kBelow) {
      g[i - 1] = kRight;
      for (int k = i - 2; k >= 0 && f[k] == kMember; --k) g[k] = kAbove;
    }
    if (i < m - 1 && f[i + 1] != kBelow) {
      g[i + 1] = kLeft;
      for (int k = i + 2; k < m && f[k] == kMember; ++k) g[k] = kAbove;
    }
    g[i] = kMember;
  }

  // Step 2: an isolated 1 2 3 block continues straight down.
  for (int i = 0; i + 2 < m; ++i) {
    bool block = true;
    for (int k = 0; k < 3 && block; ++k) {
      block = f[i + k] == k + 1 && g[i + k] == kBelow;
    }
    if (block) {
      g[i] = kRight;
      g[i + 1] = kMember;
      g[i + 2] = kLeft;
    }
  }

  auto decide = [&](DecisionContext ctx) -> std::optional<Choice> {
    DecisionView view{ctx, f, previous, g};
    auto choice = choose(view);
    if (choice) result.decisions.push_back({ctx, *choice});
    return choice;
  };

  // Step 3: a run of members touching the left boundary.
  if (f[0] == kMember && g[0] == kBelow) {
    int k = 0;
    while (k < m && f[k] == kMember && g[k] == kBelow) ++k;
    auto c = decide({g.level(), 3, DecisionKind::Bod, std::nullopt, k});
    if (!c) {
      result.stalled = true;
      return result;
    }
    if (*c == Choice::Alpha) {
      for (int t = 0; t < k; ++t) g[t] = kMember;
      if (k < m) g[k] = kLeft;
    } else {
      for (int t = 0; t < k; ++t) g[t] = kAbove;
    }
  }

  // Step 4: a run of members opened by a 1, scanned left to right over the
  // labels written so far.
  for (int i = 0; i + 1 < m; ++i) {
    if (f[i] != kRight || g[i + 1] != kBelow) continue;
    int k = i + 1;
    while (k < m && f[k] == kMember && g[k] == kBelow) ++k;
    if (k <= m - 1 && g[k] != kBelow) continue;
    const bool inner = k <= m - 1;
    auto c = decide({g.level(), 4, inner ? DecisionKind::Bid : DecisionKind::Bod, i, k});
    if (!c) {
      result.stalled = true;
      return result;
    }
    if (*c == Choice::Alpha) {
      g[i] = kRight;
      for (int t = i + 1; t < k; ++t) g[t] = kMember;
      if (inner) g[k] = kLeft;
    } else {
      for (int t = i + 1; t < k; ++t) g[t] = kAbove;
    }
  }
  return result;
}

AdvanceResult advance_level(const LabelRow& row, const LabelRow* previous, Strategy::Cursor& cursor) {
  return advance_level(row, previous,
                       [&cursor](const DecisionView& v) { return cursor.next(v); });
}

int tau(const LabelRow& row) { return row.count(kBelow); }

VertexSet members_of(const std::vector<LabelRow>& rows) {
  if (rows.empty()) throw InputError("no rows");
  VertexSet s(rows.front().size(), static_cast<int>(rows.size()));
  for (int j = 0; j < static_cast<int>(rows.size()); ++j) {
    const auto& r = rows[static_cast<std::size_t>(j)];
    for (int i = 0; i < r.size(); ++i) {
      if (r[i] == kMember) s.insert(i, j);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Runs

std::string_view to_string(ThetaOutcome::Status s) {
  switch (s) {
    case ThetaOutcome::Status::Pds: return "Pds";
    case ThetaOutcome::Status::Running: return "Running";
    case ThetaOutcome::Status::Stalled: return "Stalled";
  }
  return "?";
}

ThetaOutcome run_theta_from(const LabelRow& seed, const Strategy& strategy, int max_rows) {
  if (max_rows < 2) throw InputError("max_rows must be at least 2");
  ThetaOutcome out;
  LabelRow first = seed;
  first.set_level(0);
  out.rows.push_back(std::move(first));
  Strategy::Cursor cursor(strategy);
  while (static_cast<int>(out.rows.size()) < max_rows) {
    const LabelRow* prev = out.rows.size() >= 2 ? &out.rows[out.rows.size() - 2] : nullptr;
    auto step = advance_level(out.rows.back(), prev, cursor);
    out.trace.insert(out.trace.end(), step.decisions.begin(), step.decisions.end());
    if (step.stalled) {
      out.status = ThetaOutcome::Status::Stalled;
      out.reason = "strategy exhausted at level " + std::to_string(step.next.level());
      return out;
    }
    out.rows.push_back(std::move(step.next));
    if (tau(out.rows.back()) == 0) {
      out.status = ThetaOutcome::Status::Pds;
      const int n = static_cast<int>(out.rows.size());
      out.solution = PdsSolution{GridDims::finite(seed.size(), n), members_of(out.rows), out.trace};
      return out;
    }
  }
  out.status = ThetaOutcome::Status::Running;
  return out;
}

ThetaOutcome run_theta(const InitialCondition& initial, const Strategy& strategy, int max_rows) {
  return run_theta_from(init_labels(initial), strategy, max_rows);
}

std::vector<LabelRow> label_table_from(const LabelRow& seed, const Strategy& strategy, int rows) {
  if (rows < 1) throw InputError("rows must be positive");
  std::vector<LabelRow> table;
  LabelRow first = seed;
  first.set_level(0);
  table.push_back(std::move(first));
  Strategy::Cursor cursor(strategy);
  while (static_cast<int>(table.size()) < rows) {
    const LabelRow* prev = table.size() >= 2 ? &table[table.size() - 2] : nullptr;
    auto step = advance_level(table.back(), prev, cursor);
    if (step.stalled) {
      throw InputError("strategy exhausted at level " + std::to_string(step.next.level()));
    }
    table.push_back(std::move(step.next));
  }
  return table;
}

std::vector<LabelRow> label_table(const InitialCondition& initial, const Strategy& strategy, int rows) {
  return label_table_from(init_labels(initial), strategy, rows);
}

std::string format_decision(const Decision& d) {
  std::ostringstream os;
  os << "j=" << d.context.level << " step=" << d.context.step << " kind=" << to_string(d.context.kind)
     << " i=";
  if (d.context.i) {
    os << *d.context.i;
  } else {
    os << '-';
  }
  os << " k=" << d.context.k << " opt=" << to_char(d.choice);
  return os.str();
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& d : trace) {
    out += format_decision(d);
    out += '\n';
  }
  return out;
}

}  // namespace griddom
