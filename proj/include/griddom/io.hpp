#pragma once

// JSON documents and text/SVG renderings of solutions, arrays, reports and
// the lattice window.

#include <string>
#include <vector>

#include <json.hpp>

#include "griddom/band.hpp"
#include "griddom/codec.hpp"
#include "griddom/core.hpp"
#include "griddom/search.hpp"
#include "griddom/tpc.hpp"

namespace griddom {

using Json = nlohmann::json;

/// {"j","step","kind","i","k","opt"}; "i" is null for Step 3 decisions.
Json decision_to_json(const Decision& d);
Decision decision_from_json(const Json& j);

/// {"m","n","s":[[i,j],...],"trace":[...]} with s in row-major order.
Json solution_to_json(const PdsSolution& s);
PdsSolution solution_from_json(const Json& j);

/// {"m","n","r","s","delta","entries":[[[a,b],...],...]}
Json array_to_json(const PdsArray& a, int m, int n);
PdsArray array_from_json(const Json& j);

Json report_to_json(const EnumerationReport& report, int m, const std::vector<int>& s_prime, int n_max);

Json graph_to_json(const TransitionGraph& g);

/// One line per level: a filled or hollow dot per vertex, then the level's
/// label word when labels are given.
std::string render_text(const VertexSet& s, const std::vector<LabelRow>* labels = nullptr);

/// Grid drawing with rooms and ladders shaded and members filled.
std::string render_svg(const GridDims& dims, const VertexSet& s);

/// Text and SVG views of the lattice window.
std::string render_window_text(const LatticeWindow& w);
std::string render_window_svg(const LatticeWindow& w);

}  // namespace griddom
