#pragma once

// Regenerates the reference label tables and arrays that are kept as golden
// text files, and compares them line by line.

#include <string>
#include <string_view>
#include <vector>

namespace griddom {

inline constexpr std::string_view kFigureNames[] = {"fig1", "fig2", "fig3", "arrays"};

/// Text for one of kFigureNames; throws InputError for other names.
std::string generate_figure(std::string_view which);

/// Unified diff of two texts (three lines of context); empty when equal.
std::string unified_diff(std::string_view expected, std::string_view actual, std::string_view expected_name,
                         std::string_view actual_name);

}  // namespace griddom
