#pragma once

// Band graphs of infinite height: greedy runs with period detection, and the
// memoized transition graph over row words with its covering closed walk.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "griddom/core.hpp"
#include "griddom/theta.hpp"

namespace griddom {

/// Rows k..k+length-1 repeat forever: the row after them equals row k.
struct PeriodCertificate {
  Strategy strategy;
  int k = 0;
  int length = 0;
  std::vector<LabelRow> slices;
};

struct GreedyOutcome {
  enum class Kind { Finite, Periodic };

  Kind kind = Kind::Finite;
  std::vector<LabelRow> rows;  // every computed level
  std::optional<PdsSolution> solution;
  std::optional<PeriodCertificate> period;
};

/// Alpha at every decision until the new level has no 0 (Finite) or a row
/// word repeats (Periodic). Throws CapExceeded past row_cap levels.
GreedyOutcome greedy_band(const InitialCondition& initial, int row_cap);

/// Replays cert.strategy from the seed and checks the slices and the return
/// to row k after `length` levels.
bool verify_period(const PeriodCertificate& cert, const LabelRow& seed);
bool verify_period(const PeriodCertificate& cert, const InitialCondition& initial);

struct TransitionEdge {
  int from = 0;
  int to = 0;
  std::vector<Choice> choices;  // decisions taken during this one-level advance
  bool thread = false;          // target was already known when the edge was found
};

/// Row words reachable from a seed; node 0 is the seed. Edges out of a node
/// are stored alpha-first (lexicographic in their choice words).
struct TransitionGraph {
  int m = 0;
  std::vector<std::string> words;
  std::vector<TransitionEdge> edges;
  std::vector<std::vector<int>> out;  // edge ids per node
  std::vector<int> parent_edge;       // tree edge into each node, -1 at the root
  bool complete = true;

  std::optional<int> find(const std::string& word) const;

  std::unordered_map<std::string, int> index;
};

/// Every one-level successor of `row`, one per choice assignment, alpha-first.
std::vector<std::pair<std::vector<Choice>, LabelRow>> successors(const LabelRow& row);

inline constexpr std::size_t kDefaultStateCap = 100000;

TransitionGraph build_transition_graph(const InitialCondition& initial,
                                       std::size_t state_cap = kDefaultStateCap);
TransitionGraph build_transition_graph_from(const LabelRow& seed,
                                            std::size_t state_cap = kDefaultStateCap);

struct WalkStep {
  enum class Kind { Tree, Thread, Retrace };

  Kind kind = Kind::Tree;
  int from = 0;
  int to = 0;
  int edge = -1;  // Retrace moves back along this tree edge
};

/// Starts and ends at the seed. Edges are taken in depth-first order; moving
/// between them uses tree edges forwards and backwards. A thread into an
/// ancestor is taken right after the tree path that it closes into a cycle.
/// Throws InputError on an incomplete graph.
std::vector<WalkStep> closed_walk(const TransitionGraph& graph);

/// Words at the nodes the walk passes through.
std::vector<std::string> walk_words(const TransitionGraph& graph, const std::vector<WalkStep>& walk);

/// One certificate per thread that returns to an ancestor: the tree path from
/// the ancestor to the thread's source followed by the thread.
std::vector<PeriodCertificate> thread_cycles(const TransitionGraph& graph);

/// DOT digraph: solid tree edges, dashed threads, labels are choice words.
std::string to_dot(const TransitionGraph& graph);

}  // namespace griddom
