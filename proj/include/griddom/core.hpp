#pragma once

// Grid-graph model for perfect domination: dimensions, vertex sets, the
// five-symbol label rows, initial-condition validation and the brute-force
// reference enumerator.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace griddom {

/// Invalid caller input (out-of-range column, malformed word, bad shape).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; the input was not what the
/// operation's precondition promised (e.g. a non-PDS handed to the codec).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size limit was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m columns, n rows. An absent n stands for the band graph of infinite height.
struct GridDims {
  int m = 1;
  std::optional<int> n;

  GridDims() = default;
  GridDims(int columns, std::optional<int> rows);

  static GridDims finite(int m, int n) { return GridDims(m, n); }
  static GridDims band(int m) { return GridDims(m, std::nullopt); }

  bool is_finite() const { return n.has_value(); }
  int rows() const;  // throws InputError on a band
  bool contains(int i, int j) const;

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

struct Vertex {
  int i = 0;  // column
  int j = 0;  // row (level)

  // Row-major: level first, then column.
  friend constexpr std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
};

/// Vertex subset of a finite grid stored as one bitset word per row
/// (m <= 64).
class VertexSet {
 public:
  static constexpr int kMaxColumns = 64;

  VertexSet() = default;
  VertexSet(int m, int n);

  int m() const { return m_; }
  int n() const { return static_cast<int>(rows_.size()); }

  bool contains(int i, int j) const;
  bool contains(Vertex v) const { return contains(v.i, v.j); }
  void insert(int i, int j);
  void insert(Vertex v) { insert(v.i, v.j); }
  void erase(int i, int j);

  std::uint64_t row_bits(int j) const { return rows_.at(j); }
  void set_row_bits(int j, std::uint64_t bits);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Members in row-major order.
  std::vector<Vertex> vertices() const;

  /// Columns of the members on level j, increasing.
  std::vector<int> columns_on_row(int j) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Label alphabet of the continuation labeling.
///   0  dominated from the level below (or still undetermined)
///   1  dominated from the right
///   2  member of the dominating set
///   3  dominated from the left
///   4  dominated from the level above
using Label = std::uint8_t;
inline constexpr Label kBelow = 0;
inline constexpr Label kRight = 1;
inline constexpr Label kMember = 2;
inline constexpr Label kLeft = 3;
inline constexpr Label kAbove = 4;

/// One level of the labeling, a word of length m over {0,1,2,3,4}.
class LabelRow {
 public:
  LabelRow() = default;
  LabelRow(std::vector<Label> labels, int level);

  /// Parses a digit word such as "1222300012301223".
  static LabelRow parse(std::string_view word, int level = 0);
  static LabelRow zeros(int m, int level);

  int size() const { return static_cast<int>(labels_.size()); }
  int level() const { return level_; }
  void set_level(int level) { level_ = level; }

  Label operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  Label& operator[](int i) { return labels_[static_cast<std::size_t>(i)]; }

  std::span<const Label> labels() const { return labels_; }
  int count(Label symbol) const;

  /// The digit word; level is not part of it.
  std::string word() const;

  /// Row words compare by symbols only; the level is positional metadata.
  friend bool operator==(const LabelRow& a, const LabelRow& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
  int level_ = 0;
};

enum class InitialClass { Iavs, Complete, EmptyOrFull, Inadmissible };

std::string_view to_string(InitialClass c);

/// Components of the induced subgraph on the chosen top-side columns are
/// pairwise at distance >= 3, i.e. no two runs are separated by a single
/// absent column.
bool is_admissible(int m, std::span<const int> columns);

/// Row-0 labels for an arbitrary admissible column set (2 on members, 1/3 on
/// the neighbours flanking each run, 0 elsewhere). Used for classification and
/// for seeding the search from complete rows as well as IAVS.
LabelRow seed_labels(int m, std::span<const int> columns);

InitialClass classify_initial(int m, std::span<const int> columns);

/// Validated incomplete admissible vertex subset of the top side.
class InitialCondition {
 public:
  /// Throws InputError unless the set classifies as Iavs.
  InitialCondition(int m, std::vector<int> columns);

  int m() const { return m_; }
  const std::vector<int>& columns() const { return columns_; }

  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;

 private:
  int m_;
  std::vector<int> columns_;
};

/// All Iavs of width m in increasing bitmask order.
std::vector<InitialCondition> all_iavs(int m);

/// Every vertex outside S has exactly one grid neighbour in S.
bool is_pds(const GridDims& dims, const VertexSet& s);

/// Each connected component of the induced subgraph fills its bounding box.
bool components_are_rectangles(const GridDims& dims, const VertexSet& s);

/// Every induced component is a single edge (two vertices).
bool is_total_perfect_code(const GridDims& dims, const VertexSet& s);

struct Box {
  int i0, i1, j0, j1;  // inclusive bounds
  int width() const { return i1 - i0 + 1; }
  int height() const { return j1 - j0 + 1; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Bounding boxes of the induced components, ordered by their first vertex
/// in row-major order.
std::vector<Box> component_boxes(const VertexSet& s);

/// Optional top-side constraint for the reference enumerator.
struct TopConstraint {
  std::vector<int> columns;
};

inline constexpr int kDefaultOracleCap = 30;

/// Oracle cap honouring the GRIDDOM_MAX_ORACLE environment override.
int oracle_cap_from_env();

/// Brute-force scan of every subset of the free vertices. Returns the PDSs in
/// canonical (row-major lexicographic) order. Refuses grids with m*n > cap.
std::vector<VertexSet> oracle_enumerate(const GridDims& dims,
                                        const std::optional<TopConstraint>& top,
                                        int cap = kDefaultOracleCap);


// ---------------------------------------------------------------------------
// Decisions and solutions

/// alpha is the greedy option (writes labels from {1,2,3}); beta writes {0,4}.
enum class Choice : std::uint8_t { Alpha, Beta };

inline char to_char(Choice c) { return c == Choice::Alpha ? 'a' : 'b'; }

/// Outer decisions come from Step 3 and from Step 4 when the scan runs off the
/// right edge; inner decisions from Step 4 when it stops inside the row.
enum class DecisionKind : std::uint8_t { Bod, Bid };

std::string_view to_string(DecisionKind k);

struct DecisionContext {
  int level = 0;         // index of the level being written
  int step = 3;          // 3 or 4
  DecisionKind kind = DecisionKind::Bod;
  std::optional<int> i;  // left anchor, Step 4 only
  int k = 0;             // scan end

  friend bool operator==(const DecisionContext&, const DecisionContext&) = default;
};

struct Decision {
  DecisionContext context;
  Choice choice = Choice::Alpha;

  friend bool operator==(const Decision&, const Decision&) = default;
};

using Trace = std::vector<Decision>;

/// The choice letters of a trace, e.g. "babab".
std::string choice_string(const Trace& trace);

/// A dominating set in a finite grid together with the decisions that built it.
struct PdsSolution {
  GridDims dims;
  VertexSet vertices;
  Trace trace;
};

}  // namespace griddom
