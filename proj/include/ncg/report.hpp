#pragma once

#include <string>

#include "json.hpp"
#include "ncg/graph.hpp"

namespace ncg::graph {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// Report body with schema, counts, diameter (null when infinite), witnesses in
// cycle notation, isolated vertices and components.  Wall times live under
// "timings" only, so two runs of the same job differ only there.
Json report_json(const DiameterReport& r);
Json path_json(const PathResult& p, const Permutation& x, const Permutation& y);

std::string csv_header();
// One summary line, no trailing newline; the diameter column is "inf" when
// disconnected.
std::string csv_row(const DiameterReport& r);

}  // namespace ncg::graph
