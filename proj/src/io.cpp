#include "hypercauchy/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace hypercauchy::io {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(what + " must be a two-element array [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

problem::ProblemSpec parse_spec(const json& j) {
    for (const char* key : {"m", "n", "p", "gamma", "A", "B"}) {
        if (!j.contains(key)) {
            throw InputError(std::string("spec file missing field '") + key + "'");
        }
    }
    for (const char* key : {"m", "n", "p"}) {
        if (!j[key].is_number_integer()) {
            throw InputError(std::string("spec field '") + key + "' must be an integer");
        }
    }
    return problem::ProblemSpec(j["m"].get<int>(), j["n"].get<int>(), j["p"].get<int>(),
                                cplx_from_json(j["gamma"], "gamma"),
                                cplx_from_json(j["A"], "A"), cplx_from_json(j["B"], "B"));
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

problem::ProblemSpec load_spec(const std::string& path) {
    const json j = load_json(path);
    // Allow analyze reports to be re-ingested directly as spec fixtures.
    if (j.contains("spec") && j["spec"].is_object()) return parse_spec(j["spec"]);
    return parse_spec(j);
}

json spec_to_json(const problem::ProblemSpec& spec) {
    return json{{"m", spec.m},           {"n", spec.n},        {"p", spec.p},
                {"gamma", to_json(spec.gamma)}, {"A", to_json(spec.A)}, {"B", to_json(spec.B)}};
}

std::vector<GridPoint> load_grid(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("points") || !j["points"].is_array()) {
        throw InputError("grid file must contain an array field 'points'");
    }
    std::vector<GridPoint> points;
    points.reserve(j["points"].size());
    for (const auto& row : j["points"]) {
        const bool well_formed = row.is_array() && row.size() == 4 && row[0].is_number() &&
                                 row[1].is_number() && row[2].is_number() && row[3].is_number();
        if (!well_formed) {
            throw InputError("grid points must be four-number arrays [t_re,t_im,x_re,x_im]");
        }
        points.push_back({{row[0].get<double>(), row[1].get<double>()},
                          {row[2].get<double>(), row[3].get<double>()}});
    }
    return points;
}

SeriesData load_series_data(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("coefficients") || !j["coefficients"].is_array()) {
        throw InputError("data file must contain an array field 'coefficients'");
    }
    SeriesData data;
    data.radius = std::numeric_limits<double>::infinity();
    for (const auto& c : j["coefficients"]) {
        data.coefficients.push_back(cplx_from_json(c, "coefficient"));
    }
    if (j.contains("radius")) {
        if (j["radius"].is_string()) {
            if (j["radius"].get<std::string>() != "inf") {
                throw InputError("radius must be a positive number or \"inf\"");
            }
        } else if (j["radius"].is_number()) {
            data.radius = j["radius"].get<double>();
            if (!(data.radius > 0.0)) throw InputError("radius must be positive");
        } else {
            throw InputError("radius must be a positive number or \"inf\"");
        }
    }
    return data;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace hypercauchy::io
