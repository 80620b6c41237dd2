#pragma once

// Exhaustive depth-first traversal of the binary decision tree of the
// continuation algorithm, alpha before beta at every decision.

#include <cstdint>
#include <map>
#include <vector>

#include "griddom/core.hpp"

namespace griddom {

struct EnumerationOptions {
  int workers = 1;
  /// Keep advancing a branch after a completion so taller solutions sharing
  /// the same prefix are found as well.
  bool continue_past_completion = true;
};

struct EnumeratedSolution {
  PdsSolution solution;
  std::vector<Trace> other_traces;  // further traces reaching the same set
};

struct EnumerationReport {
  std::vector<EnumeratedSolution> solutions;  // depth-first discovery order
  std::uint64_t nodes_expanded = 0;  // decision-tree nodes: the root and both children of each decision
  int max_depth = 0;  // most decisions on one root-to-leaf path
};

/// All PDSs of height 2..n_max whose top row meets the initial condition.
EnumerationReport enumerate_all(const InitialCondition& initial, int n_max,
                                const EnumerationOptions& options = {});

/// Same traversal from an arbitrary row 0. Heights start at 2; a complete seed
/// row is itself a solution of height 1, which is not reported.
EnumerationReport enumerate_from_seed(const LabelRow& seed, int n_max,
                                      const EnumerationOptions& options = {});

std::map<int, std::size_t> count_by_n(const EnumerationReport& report);

}  // namespace griddom
