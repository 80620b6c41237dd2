#include <doctest.h>

#include <set>

#include "griddom/codec.hpp"
#include "griddom/tpc.hpp"
#include "helpers.hpp"
#include "reference_data.hpp"

using namespace griddom;
using testing_support::to_cells;
using testing_support::words;

namespace {

bool only_edges(const oracle::CellSet& s) {
  if (s.empty()) return false;
  for (const auto& c : oracle::components(s)) {
    if (c.size() != 2) return false;
  }
  return true;
}

/// Naive TPC existence by row-wise backtracking over every top row.
bool naive_has_tpc(int m, int n) {
  for (std::uint32_t top = 0; top < (1U << m); ++top) {
    std::vector<int> cols;
    for (int i = 0; i < m; ++i) {
      if ((top >> i) & 1U) cols.push_back(i);
    }
    for (const auto& s : oracle::all_pds_with_top(m, n, cols)) {
      if (oracle::is_tpc(s, m, n)) return true;
    }
  }
  return false;
}

std::vector<LabelRow> rotate_half(const std::vector<LabelRow>& t) {
  static const Label relabel[] = {4, 3, 2, 1, 0};
  std::vector<LabelRow> out;
  for (std::size_t j = t.size(); j-- > 0;) {
    std::vector<Label> row;
    for (int i = t[j].size(); i-- > 0;) row.push_back(relabel[t[j][i]]);
    out.emplace_back(row, static_cast<int>(t.size() - 1 - j));
  }
  return out;
}

}  // namespace

TEST_CASE("predicate examples") {
  CHECK(kg_has_tpc(4, 6));
  CHECK(kg_has_tpc(2, 2));
  CHECK(kg_has_tpc(6, 4));
  CHECK_FALSE(kg_has_tpc(3, 3));
  CHECK_THROWS_AS(kg_has_tpc(1, 5), InputError);
  CHECK_THROWS_AS(kg_has_tpc(5, 1), InputError);
}

TEST_CASE("predicate agrees with exhaustive searches") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 10; ++n) {
      const bool kg = kg_has_tpc(m, n);
      CHECK_MESSAGE(kg == search_has_tpc(m, n), "m=" << m << " n=" << n);
      if (m * n <= 30) {
        CHECK(kg == naive_has_tpc(m, n));
        CHECK(kg == oracle_has_tpc(m, n));
      }
    }
  }
}

TEST_CASE("gamma rule") {
  const auto source = LabelRow::parse("0440", 1);
  const auto partial = LabelRow::parse("0000", 2);
  const DecisionContext ctx{2, 4, DecisionKind::Bid, 0, 2};
  const auto zero_above = LabelRow::parse("1023", 0);
  const auto two_above = LabelRow::parse("1223", 0);
  CHECK(gamma_choice(DecisionView{ctx, source, &zero_above, partial}) == Choice::Alpha);
  CHECK(gamma_choice(DecisionView{ctx, source, &two_above, partial}) == Choice::Beta);
  CHECK(gamma_choice(DecisionView{ctx, source, nullptr, partial}) == Choice::Alpha);
  const DecisionContext wide{2, 4, DecisionKind::Bid, 0, 3};
  CHECK(gamma_choice(DecisionView{wide, source, &zero_above, partial}) == Choice::Beta);
}

TEST_CASE("tau prime") {
  const auto row = LabelRow::parse("1223");
  CHECK(tau_prime(row, row) == 4);
  CHECK(tau_prime(LabelRow::parse("0000"), LabelRow::parse("1234")) == 0);
  CHECK(tau_prime(LabelRow::parse("1220"), row) == 3);
}

TEST_CASE("gamma blocks and periods") {
  for (std::size_t t = 0; t < reference::kGammaBlocks.size(); ++t) {
    const int m = 2 + 2 * static_cast<int>(t);
    const auto table = gamma_table(m);
    CHECK(words(table) == words(reference::kGammaBlocks[t]));
    CHECK(table.size() == static_cast<std::size_t>(m + 2));
    CHECK(table.back() == table.front());
    CHECK(tau_prime(table[static_cast<std::size_t>(m + 1)], table[0]) == m);
    for (int j = 1; j <= m; ++j) CHECK(tau_prime(table[static_cast<std::size_t>(j)], table[0]) < m);
    CHECK(tpc_seed(m) == table[0]);
    CHECK(tpc_seed(m).count(kBelow) == 0);
  }
}

TEST_CASE("tall codes reproduce the reference arrays") {
  for (std::size_t t = 0; t < reference::kTpcArrays.size(); ++t) {
    const int m = 2 + 2 * static_cast<int>(t);
    const auto code = build_tpc(m, TpcShape::TallPlus2);
    CHECK(code.solution.dims == GridDims::finite(m, m + 2));
    const auto a = to_pds_array(code.solution.dims, code.solution.vertices);
    CHECK(format_array(a) == reference::kTpcArrays[t]);
    CHECK(validate_pds_array(a, m, m + 2).empty());
  }
}

TEST_CASE("every shape yields a total perfect code") {
  for (int m = 2; m <= 14; m += 2) {
    for (auto shape : {TpcShape::TallPlus2, TpcShape::Square, TpcShape::SquareRotated, TpcShape::SquareExtra,
                       TpcShape::ShortMinus2}) {
      const bool square = shape != TpcShape::TallPlus2;
      const bool extra = shape == TpcShape::SquareExtra;
      if ((square && m <= 2) || (extra && (m < 6 || m % 4 != 2))) {
        CHECK_THROWS_AS(build_tpc(m, shape), InputError);
        continue;
      }
      const auto code = build_tpc(m, shape);
      const auto& dims = code.solution.dims;
      const int n = dims.rows();
      CHECK(n == (shape == TpcShape::TallPlus2 ? m + 2 : shape == TpcShape::ShortMinus2 ? m - 2 : m));
      const auto cells = to_cells(code.solution.vertices);
      CHECK_MESSAGE(oracle::is_tpc(cells, m, n), to_string(shape) << " m=" << m);
      CHECK(only_edges(cells));
      CHECK(kg_has_tpc(m, n));
      CHECK(words(code.table) == words(direction_labels(dims, code.solution.vertices).rows));
    }
  }
  CHECK_THROWS_AS(build_tpc(5, TpcShape::TallPlus2), InputError);
}

TEST_CASE("square codes are exchanged by the half turn") {
  const auto a = build_tpc(6, TpcShape::Square);
  const auto b = build_tpc(6, TpcShape::SquareRotated);
  CHECK(a.solution.vertices != b.solution.vertices);
  oracle::CellSet turned;
  for (auto [i, j] : to_cells(a.solution.vertices)) turned.insert({5 - i, 5 - j});
  CHECK(turned == to_cells(b.solution.vertices));
  CHECK(words(rotate_half(a.table)) == words(b.table));
}

TEST_CASE("phi lands in the next block") {
  for (int m = 2; m <= 8; m += 2) {
    const auto phi = phi_transform(gamma_table(m));
    CHECK(words(phi) == words(phi_box(m)));
    const auto& next = reference::kGammaBlocks[static_cast<std::size_t>(m / 2)];
    CHECK(words(phi) == words(std::vector<std::string_view>(next.begin() + 2, next.begin() + m + 2)));
    CHECK(words(phi_transform(phi)) == words(rotate_half(gamma_table(m))));
  }
}

TEST_CASE("shape names") {
  for (auto shape : {TpcShape::TallPlus2, TpcShape::Square, TpcShape::SquareRotated, TpcShape::SquareExtra,
                     TpcShape::ShortMinus2}) {
    CHECK(parse_tpc_shape(to_string(shape)) == shape);
  }
  CHECK_THROWS_AS(parse_tpc_shape("round"), InputError);
}

TEST_CASE("lattice window") {
  const auto w = build_s1(12);
  CHECK(w.radius() == 12);
  CHECK(w.interior_is_tpc());
  CHECK_FALSE(w.contains(12, 0));
  const auto ladder = central_ladder(w);
  CHECK(std::min(ladder.first, ladder.second) == 1);
  CHECK(std::max(ladder.first, ladder.second) == 3);
  for (int t = 1; t <= 6; ++t) {
    CHECK_FALSE(preserved_by_translation(w, t, 0));
    CHECK_FALSE(preserved_by_translation(w, 0, t));
  }
  // The half turn and the two axis mirrors hold; the quarter turns do not,
  // since the central 1x3 ladder has a preferred axis.
  const auto group = symmetry_group(w);
  CHECK(std::set<Symmetry>(group.begin(), group.end()) ==
        std::set<Symmetry>{Symmetry::Identity, Symmetry::Rot180, Symmetry::MirrorX, Symmetry::MirrorY});
}

TEST_CASE("window contains each centred tall code") {
  const int radius = 12;
  const auto w = build_s1(radius);
  for (int m = 2; m <= 2 * radius - 2; m += 2) {
    const auto code = build_tpc(m, TpcShape::TallPlus2);
    bool matched = false;
    for (int turns = 0; turns < 4 && !matched; ++turns) {
      const auto members = centred_members(code.solution.vertices, turns);
      const int half_w = (turns % 2 ? m + 2 : m) / 2;
      const int half_h = (turns % 2 ? m : m + 2) / 2;
      std::set<std::pair<int, int>> box;
      for (int q = -half_h; q < half_h; ++q) {
        for (int p = -half_w; p < half_w; ++p) {
          if (w.contains(p, q)) box.insert({p, q});
        }
      }
      matched = box == std::set<std::pair<int, int>>(members.begin(), members.end());
    }
    CHECK_MESSAGE(matched, "m=" << m);
  }
}
