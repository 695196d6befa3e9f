#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypercauchy/problem.hpp"
#include "hypercauchy/solution.hpp"

namespace hypercauchy::io {

using nlohmann::json;

/// One evaluation point (t, x) in C^2.
struct GridPoint {
    cplx t;
    cplx x;
};

/// Complex numbers travel as two-element arrays [re, im].
json to_json(cplx z);
cplx cplx_from_json(const json& j, const std::string& what);

/// Problem spec file: {"m":int,"n":int,"p":int,"gamma":[re,im],"A":[re,im],"B":[re,im]}.
problem::ProblemSpec parse_spec(const json& j);
problem::ProblemSpec load_spec(const std::string& path);
json spec_to_json(const problem::ProblemSpec& spec);

/// Grid / points file: {"points": [[t_re,t_im,x_re,x_im], ...]}.
std::vector<GridPoint> load_grid(const std::string& path);

/// Series data file:
/// {"coefficients": [[re,im], ...], "radius": number or "inf"}.
struct SeriesData {
    std::vector<cplx> coefficients;
    double radius;
};
SeriesData load_series_data(const std::string& path);

json load_json(const std::string& path);
void write_json(const std::string& path, const json& j);
void write_text(const std::string& path, const std::string& text);

/// Shortest round-trip formatting for CSV cells.
std::string format_double(double v);

} // namespace hypercauchy::io
