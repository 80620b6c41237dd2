#include "griddom/search.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "griddom/theta.hpp"

namespace griddom {

namespace {

// A point in the decision tree: the levels fixed so far plus the choices
// already made for the level under construction.
struct Node {
  std::vector<LabelRow> rows;
  Trace trace;
  std::vector<Choice> pending;
  std::vector<std::uint32_t> path;  // child indices from the root
};

struct Found {
  std::vector<std::uint32_t> path;
  PdsSolution solution;
};

struct Sink {
  std::vector<Found> found;
  std::uint64_t nodes = 0;
  int max_depth = 0;
};

class Walker {
 public:
  Walker(int n_max, bool keep_going) : n_max_(n_max), keep_going_(keep_going) {}

  // Expands one node; children are appended in alpha-first order.
  void step(Node& node, Sink& sink, std::vector<Node>& children) const {
    const int m = node.rows.front().size();
    const std::size_t depth = node.rows.size();
    const LabelRow* prev = depth >= 2 ? &node.rows[depth - 2] : nullptr;
    std::size_t used = 0;
    auto chooser = [&](const DecisionView&) -> std::optional<Choice> {
      if (used < node.pending.size()) return node.pending[used++];
      return std::nullopt;
    };
    auto res = advance_level(node.rows.back(), prev, chooser);

    if (res.stalled) {
      sink.nodes += 2;
      for (Choice c : {Choice::Alpha, Choice::Beta}) {
        Node child{node.rows, node.trace, node.pending, node.path};
        child.pending.push_back(c);
        child.path.push_back(c == Choice::Alpha ? 0 : 1);
        children.push_back(std::move(child));
      }
      return;
    }

    Node child{std::move(node.rows), std::move(node.trace), {}, std::move(node.path)};
    child.trace.insert(child.trace.end(), res.decisions.begin(), res.decisions.end());
    child.rows.push_back(std::move(res.next));
    child.path.push_back(0);
    const int height = static_cast<int>(child.rows.size());
    const bool complete = tau(child.rows.back()) == 0;
    if (complete) {
      sink.found.push_back(
          {child.path, PdsSolution{GridDims::finite(m, height), members_of(child.rows), child.trace}});
    }
    if (height >= n_max_ || (complete && !keep_going_)) {
      sink.max_depth = std::max(sink.max_depth, static_cast<int>(child.trace.size()));
      return;
    }
    children.push_back(std::move(child));
  }

  void run(Node root, Sink& sink) const {
    std::vector<Node> stack;
    stack.push_back(std::move(root));
    std::vector<Node> children;
    while (!stack.empty()) {
      Node node = std::move(stack.back());
      stack.pop_back();
      children.clear();
      step(node, sink, children);
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    }
  }

 private:
  int n_max_;
  bool keep_going_;
};

}  // namespace

EnumerationReport enumerate_from_seed(const LabelRow& seed, int n_max, const EnumerationOptions& options) {
  if (n_max < 2) throw InputError("n_max must be at least 2");
  if (options.workers < 1) throw InputError("workers must be positive");
  LabelRow first = seed;
  first.set_level(0);
  const Walker walker(n_max, options.continue_past_completion);

  Sink sink;
  std::vector<Node> frontier;
  frontier.push_back(Node{{std::move(first)}, {}, {}, {}});
  if (options.workers > 1) {
    // Widen the frontier breadth-first until every worker has some subtrees.
    const std::size_t target = static_cast<std::size_t>(options.workers) * 8;
    for (int rounds = 0; rounds < 64 && !frontier.empty() && frontier.size() < target; ++rounds) {
      std::vector<Node> next;
      for (auto& node : frontier) walker.step(node, sink, next);
      frontier = std::move(next);
    }
    std::vector<std::future<Sink>> jobs;
    const std::size_t per = (frontier.size() + options.workers - 1) / options.workers;
    for (std::size_t start = 0; start < frontier.size(); start += per) {
      const std::size_t stop = std::min(frontier.size(), start + per);
      jobs.push_back(std::async(std::launch::async, [&walker, &frontier, start, stop] {
        Sink local;
        for (std::size_t t = start; t < stop; ++t) walker.run(std::move(frontier[t]), local);
        return local;
      }));
    }
    for (auto& job : jobs) {
      Sink local = job.get();
      sink.nodes += local.nodes;
      sink.max_depth = std::max(sink.max_depth, local.max_depth);
      for (auto& f : local.found) sink.found.push_back(std::move(f));
    }
  } else {
    walker.run(std::move(frontier.front()), sink);
  }

  // Lexicographic path order is the sequential depth-first discovery order.
  std::stable_sort(sink.found.begin(), sink.found.end(),
                   [](const Found& a, const Found& b) { return a.path < b.path; });

  EnumerationReport report;
  report.nodes_expanded = 1 + sink.nodes;
  report.max_depth = sink.max_depth;
  std::map<VertexSet, std::size_t> index;
  for (auto& f : sink.found) {
    auto [it, fresh] = index.try_emplace(f.solution.vertices, report.solutions.size());
    if (fresh) {
      report.solutions.push_back({std::move(f.solution), {}});
    } else {
      report.solutions[it->second].other_traces.push_back(std::move(f.solution.trace));
    }
  }
  return report;
}

EnumerationReport enumerate_all(const InitialCondition& initial, int n_max, const EnumerationOptions& options) {
  return enumerate_from_seed(init_labels(initial), n_max, options);
}

std::map<int, std::size_t> count_by_n(const EnumerationReport& report) {
  std::map<int, std::size_t> out;
  for (const auto& s : report.solutions) ++out[s.solution.dims.rows()];
  return out;
}

}  // namespace griddom
