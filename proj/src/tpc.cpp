#include "griddom/tpc.hpp"

#include <algorithm>

#include "griddom/codec.hpp"
#include "griddom/search.hpp"

namespace griddom {

namespace {

bool kg_oriented(int a, int b) {
  if (a % 2 != 0) return false;
  const int r = b % (a + 1);
  return r == 1 || r == a || r == a - 2;  // 1, -1, -3 mod a+1
}

bool only_edges(const GridDims& dims, const VertexSet& s) { return is_total_perfect_code(dims, s); }

void require_even(int m, int at_least) {
  if (m % 2 != 0 || m < at_least) {
    throw InputError("m must be even and at least " + std::to_string(at_least));
  }
}

std::vector<LabelRow> slice(const std::vector<LabelRow>& rows, int from, int to) {
  std::vector<LabelRow> out(rows.begin() + from, rows.begin() + to);
  for (int j = 0; j < static_cast<int>(out.size()); ++j) out[static_cast<std::size_t>(j)].set_level(j);
  return out;
}

TpcCode finish(TpcShape shape, const std::vector<LabelRow>& rows, Trace trace) {
  const int m = rows.front().size();
  const auto dims = GridDims::finite(m, static_cast<int>(rows.size()));
  VertexSet s = members_of(rows);
  if (!only_edges(dims, s)) {
    throw IntegrityError(std::string(to_string(shape)) + " construction is not a total perfect code");
  }
  TpcCode code;
  code.shape = shape;
  code.table = direction_labels(dims, s).rows;
  code.solution = PdsSolution{dims, std::move(s), std::move(trace)};
  return code;
}

}  // namespace

bool kg_has_tpc(int m, int n) {
  if (std::min(m, n) <= 1) throw InputError("the characterization needs min(m, n) > 1");
  return kg_oriented(m, n) || kg_oriented(n, m);
}

bool search_has_tpc(int m, int n) {
  if (m < 1 || m > 20 || n < 2) throw InputError("search_has_tpc needs 1 <= m <= 20 and n >= 2");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> cols;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) cols.push_back(i);
    }
    if (!is_admissible(m, cols)) continue;
    const auto report = enumerate_from_seed(seed_labels(m, cols), n);
    for (const auto& e : report.solutions) {
      const auto& sol = e.solution;
      if (sol.dims.rows() == n && only_edges(sol.dims, sol.vertices)) return true;
    }
  }
  return false;
}

bool oracle_has_tpc(int m, int n, int cap) {
  const auto dims = GridDims::finite(m, n);
  for (const auto& s : oracle_enumerate(dims, std::nullopt, cap)) {
    if (only_edges(dims, s)) return true;
  }
  return false;
}

Strategy gamma_strategy() { return Strategy::gamma(); }

int tau_prime(const LabelRow& next, const LabelRow& row0) {
  if (next.size() != row0.size()) throw InputError("rows of different width");
  int same = 0;
  for (int i = 0; i < next.size(); ++i) same += next[i] == row0[i] ? 1 : 0;
  return same;
}

LabelRow tpc_seed(int m) {
  require_even(m, 2);
  std::string word;
  if (m % 4 == 0) {
    for (int t = 0; t < m / 4; ++t) word += "1223";
  } else {
    word = "22";
    for (int t = 0; t < (m - 2) / 4; ++t) word += "3122";
  }
  return LabelRow::parse(word, 0);
}

namespace {

std::vector<LabelRow> gamma_rows(int m, Trace* trace) {
  const LabelRow seed = tpc_seed(m);
  std::vector<LabelRow> rows{seed};
  const Strategy gamma = gamma_strategy();
  Strategy::Cursor cursor(gamma);
  const int cap = 4 * m + 4;
  while (static_cast<int>(rows.size()) < cap) {
    const LabelRow* prev = rows.size() >= 2 ? &rows[rows.size() - 2] : nullptr;
    auto step = advance_level(rows.back(), prev, cursor);
    if (trace) trace->insert(trace->end(), step.decisions.begin(), step.decisions.end());
    rows.push_back(std::move(step.next));
    if (tau_prime(rows.back(), seed) == m) return rows;
  }
  throw IntegrityError("gamma run never returned to its seed row");
}

}  // namespace

std::vector<LabelRow> gamma_table(int m) { return gamma_rows(m, nullptr); }

std::string_view to_string(TpcShape shape) {
  switch (shape) {
    case TpcShape::TallPlus2: return "TallPlus2";
    case TpcShape::Square: return "Square";
    case TpcShape::SquareRotated: return "SquareRotated";
    case TpcShape::SquareExtra: return "SquareExtra";
    case TpcShape::ShortMinus2: return "ShortMinus2";
  }
  return "?";
}

TpcShape parse_tpc_shape(std::string_view text) {
  for (auto s : {TpcShape::TallPlus2, TpcShape::Square, TpcShape::SquareRotated, TpcShape::SquareExtra,
                 TpcShape::ShortMinus2}) {
    if (text == to_string(s)) return s;
  }
  throw InputError("unknown shape " + std::string(text) +
                   " (TallPlus2, Square, SquareRotated, SquareExtra, ShortMinus2)");
}

TpcCode build_tpc(int m, TpcShape shape) {
  switch (shape) {
    case TpcShape::TallPlus2: {
      require_even(m, 2);
      Trace trace;
      const auto rows = gamma_rows(m, &trace);
      return finish(shape, rows, std::move(trace));
    }
    case TpcShape::Square: {
      require_even(m, 4);
      const auto rows = gamma_table(m);
      // The first completed prefix of the run that is a total perfect code.
      for (int h = 2; h <= static_cast<int>(rows.size()); ++h) {
        if (tau(rows[static_cast<std::size_t>(h - 1)]) != 0) continue;
        const auto prefix = slice(rows, 0, h);
        const auto dims = GridDims::finite(m, h);
        if (only_edges(dims, members_of(prefix)) && is_pds(dims, members_of(prefix))) {
          return finish(shape, prefix, {});
        }
      }
      throw IntegrityError("gamma run has no square completion");
    }
    case TpcShape::SquareRotated: {
      require_even(m, 4);
      return finish(shape, slice(gamma_table(m), 2, m + 2), {});
    }
    case TpcShape::ShortMinus2: {
      require_even(m, 4);
      return finish(shape, slice(gamma_table(m), 2, m), {});
    }
    case TpcShape::SquareExtra: {
      if (m < 6 || m % 4 != 2) throw InputError("SquareExtra needs 6 <= m = 2 mod 4");
      // Two extra columns, repeating with period 4 down the levels, in front
      // of the (m-2) x m code.
      static constexpr std::string_view kPairs[] = {"23", "23", "41", "01"};
      const auto base = gamma_table(m - 2);
      std::vector<LabelRow> rows;
      for (int j = 0; j < m; ++j) {
        const std::string word = std::string(kPairs[j % 4]) + base[static_cast<std::size_t>(j)].word();
        rows.push_back(LabelRow::parse(word, j));
      }
      auto code = finish(shape, rows, {});
      if (!(code.table == rows)) throw IntegrityError("SquareExtra labels disagree with its code");
      return code;
    }
  }
  throw InputError("unknown shape");
}

std::vector<LabelRow> phi_transform(const std::vector<LabelRow>& table) {
  if (table.empty()) return {};
  static constexpr Label kCycle[] = {3, 0, 2, 4, 1};  // 0->3, 1->0, 2->2, 3->4, 4->1
  const int h = static_cast<int>(table.size());
  const int w = table.front().size();
  std::vector<LabelRow> out;
  for (int r = 0; r < w; ++r) {
    LabelRow row = LabelRow::zeros(h, r);
    for (int c = 0; c < h; ++c) row[c] = kCycle[table[static_cast<std::size_t>(h - 1 - c)][r]];
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<LabelRow> phi_box(int m) {
  require_even(m, 2);
  return slice(gamma_table(m + 2), 2, m + 2);
}

// ---------------------------------------------------------------------------
// Lattice window

LatticeWindow::LatticeWindow(int radius, std::vector<bool> members)
    : radius_(radius), members_(std::move(members)) {
  if (radius < 1) throw InputError("radius must be positive");
  if (members_.size() != static_cast<std::size_t>(4 * radius * radius)) {
    throw InputError("window membership has the wrong size");
  }
}

bool LatticeWindow::inside(int p, int q) const {
  return p >= -radius_ && p < radius_ && q >= -radius_ && q < radius_;
}

bool LatticeWindow::contains(int p, int q) const {
  if (!inside(p, q)) return false;
  return members_[static_cast<std::size_t>((q + radius_) * 2 * radius_ + (p + radius_))];
}

bool LatticeWindow::interior_is_tpc() const {
  for (int q = -radius_ + 1; q < radius_ - 1; ++q) {
    for (int p = -radius_ + 1; p < radius_ - 1; ++p) {
      const int count = contains(p + 1, q) + contains(p - 1, q) + contains(p, q + 1) + contains(p, q - 1);
      if (count != 1) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> centred_members(const VertexSet& s, int turns) {
  std::vector<std::pair<int, int>> out;
  for (const auto& v : s.vertices()) {
    // Doubled coordinates about the grid centre are odd integers.
    int x = 2 * v.i - (s.m() - 1);
    int y = 2 * v.j - (s.n() - 1);
    if ((x % 2 == 0) || (y % 2 == 0)) throw InputError("grid centre is not a cell centre");
    for (int t = 0; t < ((turns % 4) + 4) % 4; ++t) {
      const int nx = y;
      const int ny = -x;
      x = nx;
      y = ny;
    }
    out.emplace_back((x - 1) / 2, (y - 1) / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeWindow build_s1(int radius) {
  if (radius < 2) throw InputError("radius must be at least 2");
  // The m x (m+2) code covers [-m/2, m/2 - 1] horizontally and one more level
  // on each side vertically.
  const int big = 2 * radius;
  const auto code = build_tpc(big, TpcShape::TallPlus2);
  // Consecutive sizes nest after a clockwise quarter turn; undo the
  // accumulated turns so the innermost 2 x 4 block keeps its own orientation.
  const int turns = (big - 2) / 2;
  std::vector<bool> members(static_cast<std::size_t>(4 * radius * radius), false);
  for (auto [p, q] : centred_members(code.solution.vertices, turns)) {
    if (p >= -radius && p < radius && q >= -radius && q < radius) {
      members[static_cast<std::size_t>((q + radius) * 2 * radius + (p + radius))] = true;
    }
  }
  return LatticeWindow(radius, std::move(members));
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Identity: return "identity";
    case Symmetry::Rot90: return "rot90";
    case Symmetry::Rot180: return "rot180";
    case Symmetry::Rot270: return "rot270";
    case Symmetry::MirrorX: return "mirror-x";
    case Symmetry::MirrorY: return "mirror-y";
    case Symmetry::MirrorDiag: return "mirror-diag";
    case Symmetry::MirrorAnti: return "mirror-anti";
  }
  return "?";
}

namespace {

std::pair<int, int> apply(Symmetry s, int p, int q) {
  // In centred coordinates x = p + 1/2, y = q + 1/2, so -x is -p - 1.
  switch (s) {
    case Symmetry::Identity: return {p, q};
    case Symmetry::Rot90: return {-q - 1, p};
    case Symmetry::Rot180: return {-p - 1, -q - 1};
    case Symmetry::Rot270: return {q, -p - 1};
    case Symmetry::MirrorX: return {-p - 1, q};
    case Symmetry::MirrorY: return {p, -q - 1};
    case Symmetry::MirrorDiag: return {q, p};
    case Symmetry::MirrorAnti: return {-q - 1, -p - 1};
  }
  return {p, q};
}

}  // namespace

std::vector<Symmetry> symmetry_group(const LatticeWindow& window) {
  std::vector<Symmetry> out;
  const int r = window.radius();
  for (Symmetry s : kAllSymmetries) {
    bool holds = true;
    for (int q = -r; q < r && holds; ++q) {
      for (int p = -r; p < r && holds; ++p) {
        auto [pp, qq] = apply(s, p, q);
        holds = window.contains(p, q) == window.contains(pp, qq);
      }
    }
    if (holds) out.push_back(s);
  }
  return out;
}

bool preserved_by_translation(const LatticeWindow& window, int dp, int dq) {
  const int r = window.radius();
  for (int q = -r; q < r; ++q) {
    for (int p = -r; p < r; ++p) {
      if (!window.inside(p + dp, q + dq)) continue;
      if (window.contains(p, q) != window.contains(p + dp, q + dq)) return false;
    }
  }
  return true;
}

std::pair<int, int> central_ladder(const LatticeWindow& window) {
  const int r = window.radius();
  // Cell (p, q) has corners (p, q) .. (p+1, q+1); it is bad when none of its
  // corners is a member.
  auto bad = [&](int p, int q) {
    return !window.contains(p, q) && !window.contains(p + 1, q) && !window.contains(p, q + 1) &&
           !window.contains(p + 1, q + 1);
  };
  auto in_range = [r](int p, int q) { return p >= -r && p < r - 1 && q >= -r && q < r - 1; };
  if (!bad(-1, -1)) throw IntegrityError("central unit square is not a ladder cell");
  std::vector<std::pair<int, int>> stack{{-1, -1}};
  std::vector<std::pair<int, int>> seen{{-1, -1}};
  int p0 = -1, p1 = -1, q0 = -1, q1 = -1;
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    p0 = std::min(p0, p);
    p1 = std::max(p1, p);
    q0 = std::min(q0, q);
    q1 = std::max(q1, q);
    const std::pair<int, int> nbrs[] = {{p + 1, q}, {p - 1, q}, {p, q + 1}, {p, q - 1}};
    for (auto c : nbrs) {
      if (!in_range(c.first, c.second) || !bad(c.first, c.second)) continue;
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
      seen.push_back(c);
      stack.push_back(c);
    }
  }
  return {p1 - p0 + 1, q1 - q0 + 1};
}

}  // namespace griddom
