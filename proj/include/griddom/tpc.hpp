#pragma once

// Total perfect codes: the gamma-driven constructions in m x (m+2), m x m and
// m x (m-2) grids, the quarter-turn map between consecutive sizes, and the
// window of the lattice code assembled from them.

#include <string>
#include <string_view>
#include <vector>

#include "griddom/core.hpp"
#include "griddom/theta.hpp"

namespace griddom {

/// m even and n = -3, -1 or 1 mod (m+1), in either orientation. Throws
/// InputError when min(m, n) <= 1.
bool kg_has_tpc(int m, int n);

/// Decides existence by the exhaustive decision-tree search seeded with every
/// admissible top row (complete, empty and full rows included).
bool search_has_tpc(int m, int n);

/// Decides existence by the brute-force oracle (subject to its size cap).
bool oracle_has_tpc(int m, int n, int cap = kDefaultOracleCap);

Strategy gamma_strategy();

/// Positions where `next` agrees with `row0`.
int tau_prime(const LabelRow& next, const LabelRow& row0);

/// "22", "1223", "223122", "12231223", ... for even m >= 2.
LabelRow tpc_seed(int m);

/// Levels 0..m+1 of the gamma run from the seed; level m+1 repeats level 0.
std::vector<LabelRow> gamma_table(int m);

enum class TpcShape { TallPlus2, Square, SquareRotated, SquareExtra, ShortMinus2 };

std::string_view to_string(TpcShape shape);
TpcShape parse_tpc_shape(std::string_view text);

struct TpcCode {
  TpcShape shape = TpcShape::TallPlus2;
  PdsSolution solution;
  std::vector<LabelRow> table;  // direction labels of the code
};

/// Throws InputError outside each shape's parameter domain and
/// IntegrityError if a construction does not produce a total perfect code.
TpcCode build_tpc(int m, TpcShape shape);

/// Quarter turn clockwise with relabeling 0->3->4->1->0 (2 fixed).
std::vector<LabelRow> phi_transform(const std::vector<LabelRow>& table);

/// Rows 2..m+1 of the (m+2) gamma table: where phi of the m table lands.
std::vector<LabelRow> phi_box(int m);

/// Square window of the lattice code. Vertex (p, q) sits at (p+1/2, q+1/2)
/// so the central unit square is [-1/2, 1/2]^2; p and q range over
/// [-radius, radius-1]. q grows downwards like the grid levels.
class LatticeWindow {
 public:
  LatticeWindow(int radius, std::vector<bool> members);

  int radius() const { return radius_; }
  bool inside(int p, int q) const;
  bool contains(int p, int q) const;  // false outside the window

  /// Every vertex whose four neighbours lie in the window has exactly one
  /// member neighbour.
  bool interior_is_tpc() const;

 private:
  int radius_;
  std::vector<bool> members_;
};

LatticeWindow build_s1(int radius);

/// Generated by the quarter turn about the centre and the mirror in x = 0.
enum class Symmetry { Identity, Rot90, Rot180, Rot270, MirrorX, MirrorY, MirrorDiag, MirrorAnti };

std::string_view to_string(Symmetry s);
inline constexpr Symmetry kAllSymmetries[] = {Symmetry::Identity, Symmetry::Rot90,   Symmetry::Rot180,
                                              Symmetry::Rot270,   Symmetry::MirrorX, Symmetry::MirrorY,
                                              Symmetry::MirrorDiag, Symmetry::MirrorAnti};

/// The symmetries under which membership is invariant on the window.
std::vector<Symmetry> symmetry_group(const LatticeWindow& window);

/// Membership agrees with its shift by (dp, dq) wherever both ends lie in
/// the window.
bool preserved_by_translation(const LatticeWindow& window, int dp, int dq);

/// Cell extent (width, height) of the bad-cell component containing the
/// central unit square, restricted to the window.
std::pair<int, int> central_ladder(const LatticeWindow& window);

/// Rotates a finite code a quarter turn counterclockwise `turns` times and
/// lists the members relative to the grid centre as window coordinates.
std::vector<std::pair<int, int>> centred_members(const VertexSet& s, int turns);

}  // namespace griddom
