#include "griddom/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

namespace griddom {

namespace {

std::uint64_t full_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

void check_columns(int m, std::span<const int> columns) {
  if (m < 1) throw InputError("m must be positive");
  for (int c : columns) {
    if (c < 0 || c >= m) {
      throw InputError("column " + std::to_string(c) + " outside [0," + std::to_string(m) + ")");
    }
  }
}

std::vector<int> normalized(std::span<const int> columns) {
  std::vector<int> out(columns.begin(), columns.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Non-members of a row that see exactly one member among their four
// neighbours. `above`/`below` are zero outside the grid.
std::uint64_t exactly_one_neighbor(std::uint64_t above, std::uint64_t mid, std::uint64_t below,
                                   std::uint64_t mask) {
  const std::uint64_t l = (mid << 1) & mask;  // member on the left
  const std::uint64_t r = mid >> 1;           // member on the right
  const std::uint64_t any = l | r | above | below;
  const std::uint64_t two = (l & r) | (l & above) | (l & below) | (r & above) | (r & below) |
                            (above & below);
  return any & ~two;
}

bool row_ok(std::uint64_t above, std::uint64_t mid, std::uint64_t below, std::uint64_t mask) {
  const std::uint64_t outside = ~mid & mask;
  return (outside & ~exactly_one_neighbor(above, mid, below, mask)) == 0;
}

}  // namespace

GridDims::GridDims(int columns, std::optional<int> rows) : m(columns), n(rows) {
  if (m < 1) throw InputError("grid needs m >= 1");
  if (n && *n < 1) throw InputError("finite grid needs n >= 1");
}

int GridDims::rows() const {
  if (!n) throw InputError("band graph has no finite row count");
  return *n;
}

bool GridDims::contains(int i, int j) const {
  return i >= 0 && i < m && j >= 0 && (!n || j < *n);
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int m, int n) : m_(m), rows_(static_cast<std::size_t>(n), 0) {
  if (m < 1 || m > kMaxColumns) throw InputError("VertexSet supports 1 <= m <= 64");
  if (n < 0) throw InputError("negative row count");
}

bool VertexSet::contains(int i, int j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= n()) return false;
  return (rows_[static_cast<std::size_t>(j)] >> i) & 1U;
}

void VertexSet::insert(int i, int j) {
  if (i < 0 || i >= m_ || j < 0 || j >= n()) throw InputError("vertex outside grid");
  rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

void VertexSet::erase(int i, int j) {
  if (i < 0 || i >= m_ || j < 0 || j >= n()) return;
  rows_[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
}

void VertexSet::set_row_bits(int j, std::uint64_t bits) {
  if (bits & ~full_mask(m_)) throw InputError("row bits outside grid width");
  rows_.at(static_cast<std::size_t>(j)) = bits;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto r : rows_) total += static_cast<std::size_t>(std::popcount(r));
  return total;
}

std::vector<Vertex> VertexSet::vertices() const {
  std::vector<Vertex> out;
  for (int j = 0; j < n(); ++j) {
    for (int i = 0; i < m_; ++i) {
      if (contains(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<int> VertexSet::columns_on_row(int j) const {
  std::vector<int> out;
  for (int i = 0; i < m_; ++i) {
    if (contains(i, j)) out.push_back(i);
  }
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

// ---------------------------------------------------------------------------
// LabelRow

LabelRow::LabelRow(std::vector<Label> labels, int level) : labels_(std::move(labels)), level_(level) {
  for (Label l : labels_) {
    if (l > kAbove) throw InputError("label outside {0,...,4}");
  }
}

LabelRow LabelRow::parse(std::string_view word, int level) {
  std::vector<Label> labels;
  labels.reserve(word.size());
  for (char c : word) {
    if (c < '0' || c > '4') throw InputError("label word may only contain 0-4: " + std::string(word));
    labels.push_back(static_cast<Label>(c - '0'));
  }
  return LabelRow(std::move(labels), level);
}

LabelRow LabelRow::zeros(int m, int level) {
  return LabelRow(std::vector<Label>(static_cast<std::size_t>(m), kBelow), level);
}

int LabelRow::count(Label symbol) const {
  return static_cast<int>(std::count(labels_.begin(), labels_.end(), symbol));
}

std::string LabelRow::word() const {
  std::string out;
  out.reserve(labels_.size());
  for (Label l : labels_) out.push_back(static_cast<char>('0' + l));
  return out;
}

// ---------------------------------------------------------------------------
// Initial conditions

std::string_view to_string(InitialClass c) {
  switch (c) {
    case InitialClass::Iavs: return "IAVS";
    case InitialClass::Complete: return "Complete";
    case InitialClass::EmptyOrFull: return "EmptyOrFull";
    case InitialClass::Inadmissible: return "Inadmissible";
  }
  return "?";
}

bool is_admissible(int m, std::span<const int> columns) {
  check_columns(m, columns);
  const auto cols = normalized(columns);
  for (std::size_t k = 1; k < cols.size(); ++k) {
    // Distinct runs at distance exactly 2 share a doubly dominated gap vertex.
    if (cols[k] - cols[k - 1] == 2) return false;
  }
  return true;
}

LabelRow seed_labels(int m, std::span<const int> columns) {
  check_columns(m, columns);
  const auto cols = normalized(columns);
  std::vector<bool> member(static_cast<std::size_t>(m), false);
  for (int c : cols) member[static_cast<std::size_t>(c)] = true;
  LabelRow row = LabelRow::zeros(m, 0);
  for (int c : cols) row[c] = kMember;
  for (int c : cols) {
    if (c - 1 >= 0 && !member[static_cast<std::size_t>(c - 1)]) row[c - 1] = kRight;
    if (c + 1 < m && !member[static_cast<std::size_t>(c + 1)]) row[c + 1] = kLeft;
  }
  return row;
}

InitialClass classify_initial(int m, std::span<const int> columns) {
  check_columns(m, columns);
  const auto cols = normalized(columns);
  if (cols.empty() || static_cast<int>(cols.size()) == m) return InitialClass::EmptyOrFull;
  if (!is_admissible(m, cols)) return InitialClass::Inadmissible;
  return seed_labels(m, cols).count(kBelow) > 0 ? InitialClass::Iavs : InitialClass::Complete;
}

InitialCondition::InitialCondition(int m, std::vector<int> columns)
    : m_(m), columns_(normalized(columns)) {
  const auto c = classify_initial(m, columns_);
  if (c != InitialClass::Iavs) {
    throw InputError("initial condition is not an IAVS (" + std::string(to_string(c)) + ")");
  }
}

std::vector<InitialCondition> all_iavs(int m) {
  if (m < 1 || m > 30) throw InputError("all_iavs supports 1 <= m <= 30");
  std::vector<InitialCondition> out;
  const std::uint32_t limit = std::uint32_t{1} << m;
  std::vector<int> cols;
  for (std::uint32_t mask = 1; mask + 1 < limit; ++mask) {
    cols.clear();
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) cols.push_back(i);
    }
    if (classify_initial(m, cols) == InitialClass::Iavs) out.emplace_back(m, cols);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_pds(const GridDims& dims, const VertexSet& s) {
  const int n = dims.rows();
  if (s.m() != dims.m || s.n() != n) throw InputError("vertex set does not match grid dims");
  const std::uint64_t mask = full_mask(dims.m);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t above = j > 0 ? s.row_bits(j - 1) : 0;
    const std::uint64_t below = j + 1 < n ? s.row_bits(j + 1) : 0;
    if (!row_ok(above, s.row_bits(j), below, mask)) return false;
  }
  return true;
}

std::vector<Box> component_boxes(const VertexSet& s) {
  const int m = s.m();
  const int n = s.n();
  std::vector<int> seen(static_cast<std::size_t>(m * n), 0);
  std::vector<Box> boxes;
  std::vector<Vertex> stack;
  for (const Vertex start : s.vertices()) {
    const auto idx = static_cast<std::size_t>(start.j * m + start.i);
    if (seen[idx]) continue;
    seen[idx] = 1;
    Box b{start.i, start.i, start.j, start.j};
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      b.i0 = std::min(b.i0, v.i);
      b.i1 = std::max(b.i1, v.i);
      b.j0 = std::min(b.j0, v.j);
      b.j1 = std::max(b.j1, v.j);
      const Vertex nbrs[4] = {{v.i - 1, v.j}, {v.i + 1, v.j}, {v.i, v.j - 1}, {v.i, v.j + 1}};
      for (const Vertex w : nbrs) {
        if (!s.contains(w)) continue;
        auto& flag = seen[static_cast<std::size_t>(w.j * m + w.i)];
        if (!flag) {
          flag = 1;
          stack.push_back(w);
        }
      }
    }
    boxes.push_back(b);
  }
  return boxes;
}

bool components_are_rectangles(const GridDims& dims, const VertexSet& s) {
  if (s.m() != dims.m || s.n() != dims.rows()) throw InputError("vertex set does not match grid dims");
  std::size_t covered = 0;
  for (const Box& b : component_boxes(s)) {
    for (int j = b.j0; j <= b.j1; ++j) {
      for (int i = b.i0; i <= b.i1; ++i) {
        if (!s.contains(i, j)) return false;
      }
    }
    covered += static_cast<std::size_t>(b.width() * b.height());
  }
  return covered == s.size();
}

bool is_total_perfect_code(const GridDims& dims, const VertexSet& s) {
  if (!is_pds(dims, s) || !components_are_rectangles(dims, s)) return false;
  for (const Box& b : component_boxes(s)) {
    if (b.width() * b.height() != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reference enumerator

int oracle_cap_from_env() {
  if (const char* env = std::getenv("GRIDDOM_MAX_ORACLE")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleCap;
}

std::vector<VertexSet> oracle_enumerate(const GridDims& dims, const std::optional<TopConstraint>& top,
                                        int cap) {
  const int m = dims.m;
  const int n = dims.rows();
  if (m * n > cap) {
    throw CapExceeded("oracle refuses " + std::to_string(m) + "x" + std::to_string(n) +
                      " (m*n > " + std::to_string(cap) + ")");
  }
  const std::uint64_t mask = full_mask(m);
  std::optional<std::uint64_t> fixed_top;
  if (top) {
    check_columns(m, top->columns);
    std::uint64_t bits = 0;
    for (int c : top->columns) bits |= std::uint64_t{1} << c;
    fixed_top = bits;
  }

  // Row-by-row scan of all subsets. Level j-1 is checked as soon as level j is
  // fixed, which skips only assignments that already violate the predicate.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::function<void(int)> place = [&](int j) {
    if (j == n) {
      const std::uint64_t above = n >= 2 ? rows[static_cast<std::size_t>(n - 2)] : 0;
      if (!row_ok(above, rows[static_cast<std::size_t>(n - 1)], 0, mask)) return;
      VertexSet s(m, n);
      for (int r = 0; r < n; ++r) s.set_row_bits(r, rows[static_cast<std::size_t>(r)]);
      out.push_back(std::move(s));
      return;
    }
    const std::uint64_t first = (j == 0 && fixed_top) ? *fixed_top : 0;
    const std::uint64_t last = (j == 0 && fixed_top) ? *fixed_top : mask;
    for (std::uint64_t bits = first;; ++bits) {
      rows[static_cast<std::size_t>(j)] = bits;
      bool ok = true;
      if (j >= 1) {
        const std::uint64_t above = j >= 2 ? rows[static_cast<std::size_t>(j - 2)] : 0;
        ok = row_ok(above, rows[static_cast<std::size_t>(j - 1)], bits, mask);
      }
      if (ok) place(j + 1);
      if (bits == last) break;
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(DecisionKind k) { return k == DecisionKind::Bod ? "BOD" : "BID"; }

std::string choice_string(const Trace& trace) {
  std::string out;
  out.reserve(trace.size());
  for (const auto& d : trace) out.push_back(to_char(d.choice));
  return out;
}

}  // namespace griddom
