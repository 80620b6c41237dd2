#pragma once

// Codification of a finished PDS: neighbour-direction labels, good and bad
// unit cells of the boundary-augmented grid, the room/ladder rectangles and
// the resulting array of (width, height) pairs.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "griddom/core.hpp"

namespace griddom {

/// Label 5 marks the vertices attached outside the grid boundary.
inline constexpr Label kBoundary = 5;

struct DirectionLabeling {
  GridDims dims;
  std::vector<LabelRow> rows;  // rows[j][i]

  /// Label of (i, j), or kBoundary outside the grid.
  Label at(int i, int j) const;
};

/// Throws IntegrityError unless S is a PDS of the finite grid.
DirectionLabeling direction_labels(const GridDims& dims, const VertexSet& s);

/// Four labels of a unit cell: top-left, top-right, bottom-left, bottom-right,
/// where "top" is the smaller level index.
using CellPattern = std::array<Label, 4>;

const std::vector<CellPattern>& good_patterns();
const std::vector<CellPattern>& bad_patterns();

/// Parses "TL TR / BL BR" written as "00/22".
CellPattern parse_pattern(std::string_view text);

enum class CellClass : std::uint8_t { Good, Bad };

/// Unit cells of the augmented grid. Cell (x, y) has corners (x, y) and
/// (x+1, y+1); x ranges over [-1, m-1] and y over [-1, n-1].
struct CellMap {
  int m = 0;
  int n = 0;
  std::vector<CellClass> cells;

  CellClass at(int x, int y) const;
};

/// Interior cells must match a template; cells with a boundary corner are
/// good iff one of their grid corners is a member. Throws IntegrityError on an
/// interior cell matching neither table.
CellMap classify_4cycles(const DirectionLabeling& labeling);

/// Inclusive cell ranges.
struct CellRect {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  friend bool operator==(const CellRect&, const CellRect&) = default;
};

struct RoomsAndLadders {
  GridDims dims;
  std::vector<CellRect> rooms;
  std::vector<CellRect> ladders;
};

/// Rooms are the cells around each induced component; ladders are the
/// connected components of bad cells. Throws IntegrityError when the rooms do
/// not tile the good cells exactly or a ladder is not a rectangle.
RoomsAndLadders decompose(const DirectionLabeling& labeling);

/// Number of grid edges the rectangle spans in each direction, plus one for
/// every opposite boundary path it touches.
std::pair<int, int> extended_lengths(const CellRect& rect, const GridDims& dims);

/// entries[j][i] = (a, b) = (width, height); row j of the display is a
/// horizontal strip of the grid.
struct PdsArray {
  int r = 0;  // entries per row
  int s = 0;  // rows
  int delta = 0;
  std::vector<std::vector<std::pair<int, int>>> entries;

  int a(int i, int j) const { return entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].first; }
  int b(int i, int j) const { return entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].second; }

  friend bool operator==(const PdsArray&, const PdsArray&) = default;
  friend auto operator<=>(const PdsArray&, const PdsArray&) = default;
};

/// Builds the array and throws IntegrityError if it fails any axiom.
PdsArray to_pds_array(const GridDims& dims, const VertexSet& s);

/// Numbers (1..7) of the violated axioms, increasing.
std::vector<int> validate_pds_array(const PdsArray& array, int m, int n);

/// Mirrors every row; the ladder parity follows the new positions.
PdsArray reverse_array(const PdsArray& array);

/// One line per row, entries written "ab" and separated by spaces.
std::string format_array(const PdsArray& array);

/// Inverse of format_array (entries must be single digits); rows separated
/// by newlines or '/'.
PdsArray parse_array(std::string_view text, int delta);

}  // namespace griddom
