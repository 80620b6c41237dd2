#include "griddom/figures.hpp"

#include <algorithm>
#include <sstream>

#include "griddom/codec.hpp"
#include "griddom/theta.hpp"
#include "griddom/tpc.hpp"

namespace griddom {

namespace {

std::string join_columns(const std::vector<int>& cols) {
  std::string out;
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(cols[t]);
  }
  return out;
}

void put_rows(std::ostringstream& os, const std::vector<LabelRow>& rows) {
  for (const auto& r : rows) os << r.word() << '\n';
}

struct Example {
  const char* name;
  int m;
  std::vector<int> columns;
  const char* strategy;
  int rows;  // 0: stop at the first completion
};

const Example kFig1[] = {
    {"left", 16, {1, 2, 3, 9, 13, 14}, "babab", 0},
    {"right", 5, {1}, "bb", 0},
};

const Example kFig2[] = {
    {"top", 4, {1}, "b", 0},
    {"bottom", 4, {1}, "aaa", 4},
};

std::vector<LabelRow> example_rows(const Example& e) {
  const InitialCondition initial(e.m, e.columns);
  const auto strategy = Strategy::parse(e.strategy);
  if (e.rows > 0) return label_table(initial, strategy, e.rows);
  const auto outcome = run_theta(initial, strategy, default_max_rows(e.m));
  if (outcome.status != ThetaOutcome::Status::Pds) throw IntegrityError(std::string(e.name) + " did not complete");
  return outcome.rows;
}

std::string header(const Example& e) {
  std::string h = std::string(e.name) + " m=" + std::to_string(e.m) + " s=" + join_columns(e.columns) +
                  " strategy=" + e.strategy;
  if (e.rows > 0) h += " rows=" + std::to_string(e.rows);
  return h;
}

std::string fig1() {
  std::ostringstream os;
  for (const auto& e : kFig1) {
    os << header(e) << '\n';
    put_rows(os, example_rows(e));
  }
  return os.str();
}

std::string fig2() {
  std::ostringstream os;
  for (const auto& e : kFig2) {
    const auto rows = example_rows(e);
    os << header(e) << '\n';
    put_rows(os, rows);
    os << "array\n" << format_array(to_pds_array(GridDims::finite(e.m, static_cast<int>(rows.size())), members_of(rows)));
  }
  return os.str();
}

std::string fig3() {
  std::ostringstream os;
  for (int m = 2; m <= 10; m += 2) {
    os << "gamma m=" << m << '\n';
    put_rows(os, gamma_table(m));
  }
  for (int m = 2; m <= 8; m += 2) {
    os << "phi m=" << m << " into m=" << m + 2 << " levels 2.." << m + 1 << '\n';
    put_rows(os, phi_transform(gamma_table(m)));
  }
  return os.str();
}

std::string arrays() {
  std::ostringstream os;
  for (const auto& e : kFig1) {
    const auto rows = example_rows(e);
    const auto dims = GridDims::finite(e.m, static_cast<int>(rows.size()));
    const auto a = to_pds_array(dims, members_of(rows));
    os << "A(" << e.m << ',' << dims.rows() << ',' << a.r << ',' << a.s << ',' << a.delta << ") " << e.name << '\n';
    os << format_array(a);
  }
  for (int m = 2; m <= 10; m += 2) {
    const auto code = build_tpc(m, TpcShape::TallPlus2);
    const auto a = to_pds_array(code.solution.dims, code.solution.vertices);
    os << "tpc m=" << m << " n=" << m + 2 << '\n' << format_array(a);
  }
  return os.str();
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string generate_figure(std::string_view which) {
  if (which == "fig1") return fig1();
  if (which == "fig2") return fig2();
  if (which == "fig3") return fig3();
  if (which == "arrays") return arrays();
  throw InputError("unknown figure " + std::string(which) + " (fig1, fig2, fig3, arrays)");
}

std::string unified_diff(std::string_view expected, std::string_view actual, std::string_view expected_name,
                         std::string_view actual_name) {
  if (expected == actual) return {};
  const auto a = split_lines(expected);
  const auto b = split_lines(actual);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  // Longest common subsequence table, suffix form.
  std::vector<std::vector<int>> lcs(na + 1, std::vector<int>(nb + 1, 0));
  for (std::size_t i = na; i-- > 0;) {
    for (std::size_t j = nb; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  struct Op {
    char tag;  // ' ', '-', '+'
    std::size_t ai, bi;
  };
  std::vector<Op> ops;
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    if (i < na && j < nb && a[i] == b[j]) {
      ops.push_back({' ', i++, j++});
    } else if (i < na && (j == nb || lcs[i + 1][j] >= lcs[i][j + 1])) {
      ops.push_back({'-', i++, j});
    } else {
      ops.push_back({'+', i, j++});
    }
  }

  std::ostringstream os;
  os << "--- " << expected_name << "\n+++ " << actual_name << '\n';
  constexpr std::size_t kContext = 3;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].tag == ' ') {
      ++k;
      continue;
    }
    std::size_t begin = k >= kContext ? k - kContext : 0;
    std::size_t end = k;
    // Extend while changes are within twice the context of each other.
    std::size_t quiet = 0;
    while (end < ops.size() && quiet <= 2 * kContext) {
      quiet = ops[end].tag == ' ' ? quiet + 1 : 0;
      ++end;
    }
    end -= quiet > kContext ? quiet - kContext : 0;
    std::size_t a_count = 0, b_count = 0;
    for (std::size_t t = begin; t < end; ++t) {
      if (ops[t].tag != '+') ++a_count;
      if (ops[t].tag != '-') ++b_count;
    }
    os << "@@ -" << ops[begin].ai + (a_count ? 1 : 0) << ',' << a_count << " +" << ops[begin].bi + (b_count ? 1 : 0)
       << ',' << b_count << " @@\n";
    for (std::size_t t = begin; t < end; ++t) {
      const auto& line = ops[t].tag == '+' ? b[ops[t].bi] : a[ops[t].ai];
      os << ops[t].tag << line << '\n';
    }
    k = end;
  }
  return os.str();
}

}  // namespace griddom
