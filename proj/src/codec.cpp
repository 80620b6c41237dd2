#include "griddom/codec.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

namespace griddom {

Label DirectionLabeling::at(int i, int j) const {
  if (!dims.contains(i, j)) return kBoundary;
  return rows[static_cast<std::size_t>(j)][i];
}

DirectionLabeling direction_labels(const GridDims& dims, const VertexSet& s) {
  if (!is_pds(dims, s)) throw IntegrityError("direction labels need a perfect dominating set");
  DirectionLabeling out{dims, {}};
  for (int j = 0; j < dims.rows(); ++j) {
    LabelRow row = LabelRow::zeros(dims.m, j);
    for (int i = 0; i < dims.m; ++i) {
      if (s.contains(i, j)) {
        row[i] = kMember;
      } else if (s.contains(i, j + 1)) {
        row[i] = kBelow;
      } else if (s.contains(i + 1, j)) {
        row[i] = kRight;
      } else if (s.contains(i - 1, j)) {
        row[i] = kLeft;
      } else {
        row[i] = kAbove;
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

CellPattern parse_pattern(std::string_view text) {
  CellPattern p{};
  std::size_t k = 0;
  for (char c : text) {
    if (c == '/' || c == ' ') continue;
    if (c < '0' || c > '5' || k == 4) throw InputError("bad cell pattern: " + std::string(text));
    p[k++] = static_cast<Label>(c - '0');
  }
  if (k != 4) throw InputError("bad cell pattern: " + std::string(text));
  return p;
}

namespace {

std::vector<CellPattern> parse_all(std::initializer_list<std::string_view> list) {
  std::vector<CellPattern> out;
  for (auto t : list) out.push_back(parse_pattern(t));
  return out;
}

}  // namespace

const std::vector<CellPattern>& good_patterns() {
  static const auto table = parse_all({"00/22", "01/23", "04/23", "12/04", "12/12", "12/34", "22/22",
                                       "22/44", "23/23", "23/40", "23/41", "30/12", "40/12"});
  return table;
}

const std::vector<CellPattern>& bad_patterns() {
  // Top-left dominated from the left or above, top-right from the right or
  // above, bottom-left from the left or below, bottom-right from the right or
  // below: all sixteen combinations occur.
  static const auto table = [] {
    std::vector<CellPattern> out;
    for (Label tl : {kLeft, kAbove}) {
      for (Label tr : {kAbove, kRight}) {
        for (Label bl : {kLeft, kBelow}) {
          for (Label br : {kRight, kBelow}) out.push_back({tl, tr, bl, br});
        }
      }
    }
    return out;
  }();
  return table;
}

CellClass CellMap::at(int x, int y) const {
  if (x < -1 || x >= m || y < -1 || y >= n) throw InputError("cell outside augmented grid");
  return cells[static_cast<std::size_t>((y + 1) * (m + 1) + (x + 1))];
}

CellMap classify_4cycles(const DirectionLabeling& labeling) {
  const int m = labeling.dims.m;
  const int n = labeling.dims.rows();
  CellMap map{m, n, std::vector<CellClass>(static_cast<std::size_t>((m + 1) * (n + 1)), CellClass::Bad)};
  const auto& good = good_patterns();
  const auto& bad = bad_patterns();
  for (int y = -1; y < n; ++y) {
    for (int x = -1; x < m; ++x) {
      const CellPattern p{labeling.at(x, y), labeling.at(x + 1, y), labeling.at(x, y + 1),
                          labeling.at(x + 1, y + 1)};
      CellClass c;
      if (std::find(p.begin(), p.end(), kBoundary) != p.end()) {
        c = std::find(p.begin(), p.end(), kMember) != p.end() ? CellClass::Good : CellClass::Bad;
      } else if (std::find(good.begin(), good.end(), p) != good.end()) {
        c = CellClass::Good;
      } else if (std::find(bad.begin(), bad.end(), p) != bad.end()) {
        c = CellClass::Bad;
      } else {
        std::ostringstream os;
        os << "cell (" << x << "," << y << ") pattern " << int(p[0]) << int(p[1]) << '/' << int(p[2])
           << int(p[3]) << " is neither good nor bad";
        throw IntegrityError(os.str());
      }
      map.cells[static_cast<std::size_t>((y + 1) * (m + 1) + (x + 1))] = c;
    }
  }
  return map;
}

RoomsAndLadders decompose(const DirectionLabeling& labeling) {
  const auto& dims = labeling.dims;
  const int m = dims.m;
  const int n = dims.rows();
  const CellMap cells = classify_4cycles(labeling);
  VertexSet s(m, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      if (labeling.at(i, j) == kMember) s.insert(i, j);
    }
  }

  RoomsAndLadders out{dims, {}, {}};
  const auto idx = [m](int x, int y) { return static_cast<std::size_t>((y + 1) * (m + 1) + (x + 1)); };
  std::vector<int> owner(cells.cells.size(), -1);

  for (const Box& b : component_boxes(s)) {
    const CellRect room{b.i0 - 1, b.i1, b.j0 - 1, b.j1};
    for (int y = room.y0; y <= room.y1; ++y) {
      for (int x = room.x0; x <= room.x1; ++x) {
        if (cells.at(x, y) != CellClass::Good) throw IntegrityError("room covers a bad cell");
        if (owner[idx(x, y)] != -1) throw IntegrityError("rooms overlap");
        owner[idx(x, y)] = 0;
      }
    }
    out.rooms.push_back(room);
  }

  for (int y = -1; y < n; ++y) {
    for (int x = -1; x < m; ++x) {
      if (owner[idx(x, y)] != -1) continue;
      if (cells.at(x, y) == CellClass::Good) throw IntegrityError("good cell outside every room");
      // Flood the bad component and check that it fills its bounding box.
      CellRect box{x, x, y, y};
      std::size_t count = 0;
      std::vector<std::pair<int, int>> stack{{x, y}};
      owner[idx(x, y)] = 1;
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        ++count;
        box.x0 = std::min(box.x0, cx);
        box.x1 = std::max(box.x1, cx);
        box.y0 = std::min(box.y0, cy);
        box.y1 = std::max(box.y1, cy);
        const std::pair<int, int> nbrs[] = {{cx + 1, cy}, {cx - 1, cy}, {cx, cy + 1}, {cx, cy - 1}};
        for (auto [nx, ny] : nbrs) {
          if (nx < -1 || nx >= m || ny < -1 || ny >= n) continue;
          if (owner[idx(nx, ny)] != -1 || cells.at(nx, ny) != CellClass::Bad) continue;
          owner[idx(nx, ny)] = 1;
          stack.emplace_back(nx, ny);
        }
      }
      if (count != static_cast<std::size_t>(box.width() * box.height())) {
        throw IntegrityError("ladder is not a rectangle");
      }
      out.ladders.push_back(box);
    }
  }
  return out;
}

std::pair<int, int> extended_lengths(const CellRect& rect, const GridDims& dims) {
  const int m = dims.m;
  const int n = dims.rows();
  const int inner_w = std::min(rect.x1 + 1, m - 1) - std::max(rect.x0, 0);
  const int inner_h = std::min(rect.y1 + 1, n - 1) - std::max(rect.y0, 0);
  const int w = inner_w + (rect.x0 == -1 ? 1 : 0) + (rect.x1 == m - 1 ? 1 : 0);
  const int h = inner_h + (rect.y0 == -1 ? 1 : 0) + (rect.y1 == n - 1 ? 1 : 0);
  return {w, h};
}

PdsArray to_pds_array(const GridDims& dims, const VertexSet& s) {
  const auto labeling = direction_labels(dims, s);
  const auto parts = decompose(labeling);
  const int m = dims.m;
  const int n = dims.rows();

  struct Rect {
    CellRect cells;
    bool ladder;
  };
  std::vector<Rect> rects;
  for (const auto& r : parts.rooms) rects.push_back({r, false});
  for (const auto& r : parts.ladders) rects.push_back({r, true});
  const auto idx = [m](int x, int y) { return static_cast<std::size_t>((y + 1) * (m + 1) + (x + 1)); };
  std::vector<int> owner(static_cast<std::size_t>((m + 1) * (n + 1)), -1);
  for (int id = 0; id < static_cast<int>(rects.size()); ++id) {
    const auto& c = rects[static_cast<std::size_t>(id)].cells;
    for (int y = c.y0; y <= c.y1; ++y) {
      for (int x = c.x0; x <= c.x1; ++x) owner[idx(x, y)] = id;
    }
  }

  // The unique rectangle of the other kind met across one side.
  auto neighbour = [&](int id, bool rightwards) -> int {
    const auto& r = rects[static_cast<std::size_t>(id)];
    std::set<int> found;
    if (rightwards) {
      for (int y = r.cells.y0; y <= r.cells.y1; ++y) found.insert(owner[idx(r.cells.x1 + 1, y)]);
    } else {
      for (int x = r.cells.x0; x <= r.cells.x1; ++x) found.insert(owner[idx(x, r.cells.y1 + 1)]);
    }
    std::erase_if(found, [&](int o) { return rects[static_cast<std::size_t>(o)].ladder == r.ladder; });
    if (found.size() != 1) throw IntegrityError("rooms and ladders do not alternate");
    return *found.begin();
  };

  auto chains = [&](bool horizontal) {
    std::vector<int> starts;
    for (int id = 0; id < static_cast<int>(rects.size()); ++id) {
      const auto& c = rects[static_cast<std::size_t>(id)].cells;
      if ((horizontal ? c.x0 : c.y0) == -1) starts.push_back(id);
    }
    std::sort(starts.begin(), starts.end(), [&](int a, int b) {
      const auto& ca = rects[static_cast<std::size_t>(a)].cells;
      const auto& cb = rects[static_cast<std::size_t>(b)].cells;
      return horizontal ? ca.y0 < cb.y0 : ca.x0 < cb.x0;
    });
    std::vector<std::vector<int>> out;
    for (int id : starts) {
      std::vector<int> chain{id};
      while (true) {
        const auto& c = rects[static_cast<std::size_t>(chain.back())].cells;
        if ((horizontal ? c.x1 : c.y1) == (horizontal ? m - 1 : n - 1)) break;
        chain.push_back(neighbour(chain.back(), horizontal));
      }
      out.push_back(std::move(chain));
    }
    return out;
  };

  const auto rows = chains(true);
  const auto cols = chains(false);
  std::size_t placed = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != cols.size()) throw IntegrityError("ragged room/ladder array");
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      if (cols[i].size() != rows.size() || cols[i][j] != rows[j][i]) {
        throw IntegrityError("row and column chains disagree");
      }
      ++placed;
    }
  }
  if (placed != rects.size()) throw IntegrityError("rectangles left out of the array");

  PdsArray array;
  array.s = static_cast<int>(rows.size());
  array.r = static_cast<int>(cols.size());
  std::optional<int> ladder_parity;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    std::vector<std::pair<int, int>> line;
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const auto& rect = rects[static_cast<std::size_t>(rows[j][i])];
      line.push_back(extended_lengths(rect.cells, dims));
      const int parity = static_cast<int>((i + j) % 2);
      if (rect.ladder) {
        if (ladder_parity && *ladder_parity != parity) throw IntegrityError("ladders on both parities");
        ladder_parity = parity;
      }
    }
    array.entries.push_back(std::move(line));
  }
  array.delta = ladder_parity.value_or(1);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const bool ladder = rects[static_cast<std::size_t>(rows[j][i])].ladder;
      if (ladder != (static_cast<int>((i + j) % 2) == array.delta)) {
        throw IntegrityError("rooms and ladders do not alternate");
      }
    }
  }

  if (auto bad = validate_pds_array(array, m, n); !bad.empty()) {
    throw IntegrityError("array violates axiom " + std::to_string(bad.front()));
  }
  return array;
}

std::vector<int> validate_pds_array(const PdsArray& array, int m, int n) {
  const int r = array.r;
  const int s = array.s;
  std::vector<int> violated;
  auto flag = [&violated](int axiom) {
    if (std::find(violated.begin(), violated.end(), axiom) == violated.end()) violated.push_back(axiom);
  };
  bool shape_ok = r >= 1 && s >= 1 && static_cast<int>(array.entries.size()) == s;
  for (const auto& line : array.entries) shape_ok = shape_ok && static_cast<int>(line.size()) == r;
  if (!shape_ok) return {6, 7};

  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < r; ++i) {
      if ((i + j) % 2 == array.delta && array.a(i, j) != 1 && array.b(i, j) != 1) flag(1);
      if (j + 1 < s && std::abs(array.a(i, j + 1) - array.a(i, j)) > 2) flag(2);
      if (i + 1 < r && std::abs(array.b(i + 1, j) - array.b(i, j)) > 2) flag(3);
    }
  }
  for (int j = 0; j + 1 < s; ++j) {
    int upper = 0;
    int lower = 0;
    for (int i = 0; i + 1 < r; ++i) {
      upper += array.a(i, j);
      lower += array.a(i, j + 1);
      if (std::abs(upper - lower) > 1) flag(4);
    }
  }
  for (int i = 0; i + 1 < r; ++i) {
    int left = 0;
    int right = 0;
    for (int j = 0; j + 1 < s; ++j) {
      left += array.b(i, j);
      right += array.b(i + 1, j);
      if (std::abs(left - right) > 1) flag(5);
    }
  }
  for (int j = 0; j < s; ++j) {
    int sum = 0;
    for (int i = 0; i < r; ++i) sum += array.a(i, j);
    if (sum != m + 1) flag(6);
  }
  for (int i = 0; i < r; ++i) {
    int sum = 0;
    for (int j = 0; j < s; ++j) sum += array.b(i, j);
    if (sum != n + 1) flag(7);
  }
  std::sort(violated.begin(), violated.end());
  return violated;
}

PdsArray reverse_array(const PdsArray& array) {
  PdsArray out = array;
  for (auto& line : out.entries) std::reverse(line.begin(), line.end());
  out.delta = (array.delta + array.r - 1) % 2;
  return out;
}

std::string format_array(const PdsArray& array) {
  std::string out;
  for (const auto& line : array.entries) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(line[i].first);
      out += std::to_string(line[i].second);
    }
    out += '\n';
  }
  return out;
}

PdsArray parse_array(std::string_view text, int delta) {
  PdsArray array;
  array.delta = delta;
  std::vector<std::pair<int, int>> line;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    if (token.size() != 2 || token[0] < '1' || token[0] > '9' || token[1] < '1' || token[1] > '9') {
      throw InputError("array entry must be two digits: " + token);
    }
    line.emplace_back(token[0] - '0', token[1] - '0');
    token.clear();
  };
  auto flush_line = [&] {
    flush_token();
    if (!line.empty()) array.entries.push_back(std::move(line));
    line.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == '/') {
      flush_line();
    } else if (c == ' ' || c == '\t' || c == ',' || c == '(' || c == ')') {
      flush_token();
    } else {
      token.push_back(c);
    }
  }
  flush_line();
  array.s = static_cast<int>(array.entries.size());
  array.r = array.entries.empty() ? 0 : static_cast<int>(array.entries.front().size());
  return array;
}

}  // namespace griddom
