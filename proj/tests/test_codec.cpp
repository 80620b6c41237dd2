#include <doctest.h>

#include <map>
#include <set>

#include "griddom/codec.hpp"
#include "griddom/theta.hpp"
#include "helpers.hpp"
#include "reference_data.hpp"

using namespace griddom;
using testing_support::from_cells;
using testing_support::members_from_words;
using testing_support::to_cells;

namespace {

VertexSet from_rows(const std::vector<std::string_view>& rows) {
  return from_cells(members_from_words(rows), static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
}

GridDims dims_of(const std::vector<std::string_view>& rows) {
  return GridDims::finite(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
}

oracle::CellSet mirrored(const oracle::CellSet& s, int m) {
  oracle::CellSet out;
  for (auto [i, j] : s) out.insert({m - 1 - i, j});
  return out;
}

/// Row and column sums straight from the array entries.
bool sums_match(const PdsArray& a, int m, int n) {
  for (const auto& row : a.entries) {
    int sum = 0;
    for (auto [w, h] : row) sum += w;
    if (sum != m + 1) return false;
  }
  for (std::size_t i = 0; i < a.entries[0].size(); ++i) {
    int sum = 0;
    for (const auto& row : a.entries) sum += row[i].second;
    if (sum != n + 1) return false;
  }
  return true;
}

std::vector<std::pair<oracle::CellSet, GridDims>> small_pds() {
  std::vector<std::pair<oracle::CellSet, GridDims>> out;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (std::uint32_t top = 0; top < (1U << m); ++top) {
        std::vector<int> cols;
        for (int i = 0; i < m; ++i) {
          if ((top >> i) & 1U) cols.push_back(i);
        }
        for (auto& s : oracle::all_pds_with_top(m, n, cols)) out.push_back({std::move(s), GridDims::finite(m, n)});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("direction labels") {
  VertexSet edge(2, 2);
  edge.insert(0, 0);
  edge.insert(0, 1);
  const auto l = direction_labels(GridDims::finite(2, 2), edge);
  CHECK(l.at(0, 0) == kMember);
  CHECK(l.at(0, 1) == kMember);
  CHECK(l.at(1, 0) == kLeft);
  CHECK(l.at(1, 1) == kLeft);
  CHECK(l.at(-1, 0) == kBoundary);
  CHECK(l.at(0, 2) == kBoundary);

  const auto big = direction_labels(dims_of(reference::kSixteenRows), from_rows(reference::kSixteenRows));
  CHECK(testing_support::words(big.rows) == testing_support::words(reference::kSixteenRows));
  const auto diag = direction_labels(dims_of(reference::kDiagonalRows), from_rows(reference::kDiagonalRows));
  CHECK(testing_support::words(diag.rows) == testing_support::words(reference::kDiagonalRows));

  VertexSet centre(3, 3);
  centre.insert(1, 1);
  CHECK_THROWS_AS(direction_labels(GridDims::finite(3, 3), centre), IntegrityError);
}

TEST_CASE("direction labels agree with the naive definition") {
  for (const auto& [cells, dims] : small_pds()) {
    const auto l = direction_labels(dims, from_cells(cells, dims.m, dims.rows()));
    for (int j = 0; j < dims.rows(); ++j) {
      for (int i = 0; i < dims.m; ++i) REQUIRE(l.at(i, j) == oracle::direction_label(cells, i, j));
    }
  }
}

TEST_CASE("cell tables") {
  std::set<CellPattern> good(good_patterns().begin(), good_patterns().end());
  std::set<CellPattern> bad(bad_patterns().begin(), bad_patterns().end());
  CHECK(good.size() == 13);
  for (auto text : reference::kGoodCells) CHECK(good.count(parse_pattern(text)));
  // Printed bad entries are all present; the table is the full product of
  // the four corner alternatives.
  for (auto text : reference::kBadCellsPrinted) CHECK(bad.count(parse_pattern(text)));
  CHECK(bad.size() == 16);
  for (Label tl : {3, 4}) {
    for (Label tr : {4, 1}) {
      for (Label bl : {3, 0}) {
        for (Label br : {1, 0}) CHECK(bad.count(CellPattern{tl, tr, bl, br}));
      }
    }
  }
  for (const auto& p : good) CHECK_FALSE(bad.count(p));
  CHECK_THROWS_AS(parse_pattern("1/2"), InputError);
}

TEST_CASE("every interior cell of a small PDS is classified") {
  for (const auto& [cells, dims] : small_pds()) {
    const auto l = direction_labels(dims, from_cells(cells, dims.m, dims.rows()));
    const auto map = classify_4cycles(l);
    for (int y = 0; y + 1 < dims.rows(); ++y) {
      for (int x = 0; x + 1 < dims.m; ++x) {
        const bool has_member = cells.count({x, y}) || cells.count({x + 1, y}) || cells.count({x, y + 1}) ||
                                cells.count({x + 1, y + 1});
        REQUIRE((map.at(x, y) == CellClass::Good) == has_member);
      }
    }
  }
}

TEST_CASE("decomposition sizes") {
  const auto big = decompose(direction_labels(dims_of(reference::kSixteenRows), from_rows(reference::kSixteenRows)));
  CHECK(big.rooms.size() + big.ladders.size() == 49);
  const auto five = decompose(direction_labels(dims_of(reference::kFiveRows), from_rows(reference::kFiveRows)));
  CHECK(five.rooms.size() + five.ladders.size() == 15);
  const auto diag =
      decompose(direction_labels(dims_of(reference::kDiagonalRows), from_rows(reference::kDiagonalRows)));
  CHECK(diag.rooms.size() == 4);
  CHECK(diag.ladders.size() == 5);
}

TEST_CASE("extended lengths") {
  const auto dims = GridDims::finite(6, 6);
  CHECK(extended_lengths(CellRect{1, 2, 1, 1}, dims) == std::pair{2, 1});
  CHECK(extended_lengths(CellRect{-1, 0, 1, 1}, dims).first == 2);
  CHECK(extended_lengths(CellRect{-1, 5, 1, 1}, dims).first == 5 + 2);
  CHECK(extended_lengths(CellRect{2, 3, -1, 5}, dims) == std::pair{2, 7});
}

TEST_CASE("reference arrays") {
  const auto big = to_pds_array(dims_of(reference::kSixteenRows), from_rows(reference::kSixteenRows));
  CHECK(format_array(big) == reference::kSixteenArray);
  CHECK(big.r == 7);
  CHECK(big.s == 7);
  CHECK(big.delta == 0);
  CHECK(validate_pds_array(big, 16, 11).empty());

  const auto five = to_pds_array(dims_of(reference::kFiveRows), from_rows(reference::kFiveRows));
  CHECK(format_array(five) == reference::kFiveArray);
  CHECK(five.r == 3);
  CHECK(five.s == 5);
  CHECK(five.delta == 0);
  CHECK(validate_pds_array(five, 5, 7).empty());

  CHECK(format_array(to_pds_array(dims_of(reference::kDiagonalRows), from_rows(reference::kDiagonalRows))) ==
        reference::kDiagonalArray);
  CHECK(format_array(to_pds_array(dims_of(reference::kContinuedRows), from_rows(reference::kContinuedRows))) ==
        reference::kContinuedArray);
}

TEST_CASE("array validation") {
  CHECK(validate_pds_array(parse_array(reference::kSixteenArray, 0), 16, 11).empty());
  CHECK(validate_pds_array(parse_array(reference::kFiveArray, 0), 5, 7).empty());
  auto wider = parse_array(reference::kSixteenArray, 0);
  wider.entries[0][1].first += 1;
  const auto v = validate_pds_array(wider, 16, 11);
  CHECK(std::find(v.begin(), v.end(), 6) != v.end());

  for (std::size_t t = 0; t < reference::kTpcArrays.size(); ++t) {
    const int m = 2 + 2 * static_cast<int>(t);
    const int delta = (m / 2) % 2;  // ladders sit on odd positions when m = 2 mod 4
    CHECK(validate_pds_array(parse_array(reference::kTpcArrays[t], delta), m, m + 2).empty());
  }
  const auto printed = parse_array(reference::kTpcArrayEightPrinted, 0);
  CHECK_FALSE(sums_match(printed, 8, 10));
  const auto bad = validate_pds_array(printed, 8, 10);
  CHECK(std::find(bad.begin(), bad.end(), 6) != bad.end());
  CHECK(std::find(bad.begin(), bad.end(), 7) != bad.end());
}

TEST_CASE("reversal mirrors the code") {
  const auto big = to_pds_array(dims_of(reference::kSixteenRows), from_rows(reference::kSixteenRows));
  CHECK(validate_pds_array(reverse_array(big), 16, 11).empty());
  CHECK(reverse_array(reverse_array(big)) == big);
  const auto five = to_pds_array(dims_of(reference::kFiveRows), from_rows(reference::kFiveRows));
  CHECK(validate_pds_array(reverse_array(five), 5, 7).empty());
  const auto one = parse_array("33", 1);
  CHECK(reverse_array(one) == one);

  for (const auto& [cells, dims] : small_pds()) {
    const auto a = to_pds_array(dims, from_cells(cells, dims.m, dims.rows()));
    const auto b = to_pds_array(dims, from_cells(mirrored(cells, dims.m), dims.m, dims.rows()));
    REQUIRE(reverse_array(a) == b);
  }
}

TEST_CASE("arrays of small codes are valid, alternate and are injective") {
  std::map<std::pair<std::pair<int, int>, PdsArray>, oracle::CellSet> seen;
  for (const auto& [cells, dims] : small_pds()) {
    const auto a = to_pds_array(dims, from_cells(cells, dims.m, dims.rows()));
    REQUIRE(validate_pds_array(a, dims.m, dims.rows()).empty());
    REQUIRE(sums_match(a, dims.m, dims.rows()));
    for (int j = 0; j < a.s; ++j) {
      for (int i = 0; i < a.r; ++i) {
        const bool ladder = (i + j) % 2 == a.delta;
        if (ladder) REQUIRE(std::min(a.a(i, j), a.b(i, j)) == 1);
      }
    }
    const auto [it, inserted] = seen.emplace(std::pair{std::pair{dims.m, dims.rows()}, a}, cells);
    REQUIRE_MESSAGE(inserted, "two codes share an array in " << dims.m << "x" << dims.rows());
  }
}

TEST_CASE("array text round trip") {
  const auto a = parse_array(reference::kSixteenArray, 0);
  CHECK(format_array(a) == reference::kSixteenArray);
  CHECK(parse_array("12 22 21/23 13 24", 0) == parse_array(reference::kContinuedArray, 0));
  CHECK_THROWS_AS(parse_array("12 2", 0), InputError);
}
