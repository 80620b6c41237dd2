#pragma once

// The level-by-level continuation algorithm: label initialization, one
// advance step with its binary decisions, and complete runs under a strategy.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "griddom/core.hpp"

namespace griddom {

/// Read-only view handed to strategies at each decision.
struct DecisionView {
  const DecisionContext& context;
  const LabelRow& source;      // level context.level - 1
  const LabelRow* previous;    // level context.level - 2, null at the seed
  const LabelRow& partial;     // level context.level as written so far
};

/// Supplies choices during advance_level. Returning nullopt means the strategy
/// has nothing more to say; the level is then abandoned.
using Chooser = std::function<std::optional<Choice>(const DecisionView&)>;

/// Selects alpha exactly when the scan covered a single vertex and the label
/// above its start (on the level preceding the source) is 0 or absent.
Choice gamma_choice(const DecisionView& view);

class Strategy {
 public:
  enum class Kind { Explicit, AllAlpha, AllBeta, Gamma, Callback };
  using Callback = std::function<Choice(const DecisionView&)>;

  static Strategy explicit_sequence(std::vector<Choice> choices);
  static Strategy all_alpha();
  static Strategy all_beta();
  static Strategy gamma();
  static Strategy callback(Callback fn);

  /// "alpha", "beta", "gamma", or a word over {a,b} (possibly empty).
  static Strategy parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<Choice>& sequence() const { return sequence_; }
  std::string describe() const;

  /// Fresh consumption state; Explicit sequences are read from the start.
  class Cursor {
   public:
    explicit Cursor(const Strategy& s) : strategy_(&s) {}
    std::optional<Choice> next(const DecisionView& view);
    std::size_t consumed() const { return consumed_; }

   private:
    const Strategy* strategy_;
    std::size_t consumed_ = 0;
  };

 private:
  Kind kind_ = Kind::AllAlpha;
  std::vector<Choice> sequence_;
  Callback callback_;
};

/// Row 0 of the labeling for a validated initial condition.
LabelRow init_labels(const InitialCondition& initial);

struct AdvanceResult {
  LabelRow next;
  std::vector<Decision> decisions;
  bool stalled = false;  // the chooser declined a decision; `next` is partial
};

/// Computes level row.level()+1 from `row` (and the level before it, which the
/// gamma rule inspects). Decisions are reported in encounter order.
AdvanceResult advance_level(const LabelRow& row, const LabelRow* previous, const Chooser& choose);
AdvanceResult advance_level(const LabelRow& row, const LabelRow* previous, Strategy::Cursor& cursor);

/// Number of 0 labels.
int tau(const LabelRow& row);

/// Members are the positions labeled 2 on each row.
VertexSet members_of(const std::vector<LabelRow>& rows);

struct ThetaOutcome {
  enum class Status { Pds, Running, Stalled };

  Status status = Status::Running;
  std::vector<LabelRow> rows;  // every computed level, starting at 0
  Trace trace;
  std::optional<PdsSolution> solution;  // set iff status == Pds
  std::string reason;                   // set iff status == Stalled
};

std::string_view to_string(ThetaOutcome::Status s);

inline int default_max_rows(int m) { return 4 * m; }

/// Runs until the new level has no 0 (a PDS of height level+1), the strategy
/// runs out, or max_rows levels exist.
ThetaOutcome run_theta(const InitialCondition& initial, const Strategy& strategy, int max_rows);

/// Same loop seeded with an arbitrary row 0 (complete rows included).
ThetaOutcome run_theta_from(const LabelRow& seed, const Strategy& strategy, int max_rows);

/// Exactly `rows` levels, advancing through completions instead of stopping.
/// Throws InputError if the strategy runs out first.
std::vector<LabelRow> label_table(const InitialCondition& initial, const Strategy& strategy, int rows);
std::vector<LabelRow> label_table_from(const LabelRow& seed, const Strategy& strategy, int rows);

/// "j=<int> step=<3|4> kind=<BOD|BID> i=<int|-> k=<int> opt=<a|b>"
std::string format_decision(const Decision& d);
std::string format_trace(const Trace& trace);

}  // namespace griddom
