#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "griddom/core.hpp"
#include "griddom/theta.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::CellSet to_cells(const griddom::VertexSet& s) {
  oracle::CellSet out;
  for (const auto& v : s.vertices()) out.insert({v.i, v.j});
  return out;
}

inline griddom::VertexSet from_cells(const oracle::CellSet& cells, int m, int n) {
  griddom::VertexSet s(m, n);
  for (auto [i, j] : cells) s.insert(i, j);
  return s;
}

inline std::vector<std::string> words(const std::vector<griddom::LabelRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.word());
  return out;
}

inline std::vector<std::string> words(const std::vector<std::string_view>& rows) {
  return {rows.begin(), rows.end()};
}

/// Members read from a label table: every position labelled 2.
inline oracle::CellSet members_from_words(const std::vector<std::string_view>& rows) {
  oracle::CellSet out;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      if (rows[j][i] == '2') out.insert({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return out;
}

}  // namespace testing_support
