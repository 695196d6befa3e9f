#pragma once

#include <string>

namespace hypercauchy::cli {

/// Options for one invocation.  Paths reference JSON inputs; `out` receives
/// the report (JSON) or grid (CSV).  Exit codes: 0 success, 2 input error,
/// 3 mathematical degeneracy, 4 numerical failure.
struct AnalyzeOptions {
    std::string spec_path;
    int l = 0;
    std::string root = "plus";
    std::string out_path;
};

struct EvalOptions {
    std::string spec_path;
    int l = 0;
    std::string root = "plus";
    std::string grid_path;
    std::string out_path;
};

struct SeriesOptions {
    std::string spec_path;
    std::string data_path;
    std::string grid_path;
    std::string out_path;
    int truncation = 500;
    double tail_tolerance = 1e-10;
};

struct MonodromyOptions {
    std::string spec_path;
    int l = 0;
    std::string root = "plus";
    std::string base;  // "t_re,t_im,x_re,x_im"
    std::string loop = "k2";
    std::string out_path;
};

struct VerifyOptions {
    std::string spec_path;
    int l = 0;
    std::string root = "plus";
    std::string points_path;
    std::string out_path;
};

int run_analyze(const AnalyzeOptions& opt);
int run_eval(const EvalOptions& opt);
int run_series(const SeriesOptions& opt);
int run_monodromy(const MonodromyOptions& opt);
int run_verify(const VerifyOptions& opt);

/// Full argument-parsing entry point used by the binary.
int main_entry(int argc, const char* const* argv);

} // namespace hypercauchy::cli
