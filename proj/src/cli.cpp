#include "hypercauchy/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypercauchy/classify.hpp"
#include "hypercauchy/continuation.hpp"
#include "hypercauchy/io.hpp"
#include "hypercauchy/verify.hpp"

namespace hypercauchy::cli {

namespace {

using io::json;

problem::RootChoice parse_root(const std::string& root) {
    if (root == "plus") return problem::RootChoice::plus;
    if (root == "minus") return problem::RootChoice::minus;
    throw InputError("--root must be 'plus' or 'minus'");
}

double parse_base_component(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw InputError("malformed --base component: " + text);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("malformed --base component: " + text);
    }
}

std::pair<cplx, cplx> parse_basepoint(const std::string& base) {
    std::vector<double> parts;
    std::stringstream ss(base);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(parse_base_component(item));
    }
    if (parts.size() != 4) {
        throw InputError("--base must be four comma-separated numbers t_re,t_im,x_re,x_im");
    }
    return {cplx(parts[0], parts[1]), cplx(parts[2], parts[3])};
}

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) return err->exit_code();
    return 4;
}

json classification_to_json(const classify::ClassificationReport& rep) {
    json j{{"case", classify::case_tag_name(rep.case_tag)},
           {"holomorphic_K1", rep.holomorphic_K1},
           {"holomorphic_K2", rep.holomorphic_K2},
           {"k2_decidable", rep.k2_decidable},
           {"witness", rep.witness}};
    if (rep.k2_ramification_exponent) {
        j["k2_ramification_exponent"] = io::to_json(*rep.k2_ramification_exponent);
    }
    return j;
}

} // namespace

int run_analyze(const AnalyzeOptions& opt) {
    try {
        const problem::ProblemSpec spec = io::load_spec(opt.spec_path);
        const problem::RootChoice root = parse_root(opt.root);
        const solution::MonomialSolution u = solution::build_monomial(spec, opt.l, root);

        json report;
        report["spec"] = io::spec_to_json(spec);
        report["q"] = spec.q();
        report["alpha_plus"] = io::to_json(u.dp.alpha_plus);
        report["alpha_minus"] = io::to_json(u.dp.alpha_minus);
        report["root_choice"] = opt.root;
        report["l"] = opt.l;
        report["a"] = io::to_json(u.dp.a);
        report["b"] = io::to_json(u.dp.b);
        report["c"] = io::to_json(u.dp.c);
        // Parameters under the other root choice: a and b swap, c is shared.
        {
            const auto other = problem::derive_params(
                spec, opt.l,
                root == problem::RootChoice::plus ? problem::RootChoice::minus
                                                  : problem::RootChoice::plus);
            report["other_root"] = json{{"root_choice", opt.root == "plus" ? "minus" : "plus"},
                                        {"a", io::to_json(other.a)},
                                        {"b", io::to_json(other.b)},
                                        {"c", io::to_json(other.c)}};
        }
        report["char_map"] = json{{"coefficient", u.map.coefficient},
                                  {"t_exponent", u.map.t_exponent},
                                  {"x_exponent", u.map.x_exponent}};
        report["degeneracy"] = json{{"gamma_negative_integer", u.flags.gamma_negative_integer},
                                    {"c_integer", u.flags.c_integer},
                                    {"cab_integer", u.flags.cab_integer},
                                    {"ab_integer", u.flags.ab_integer}};
        report["classification"] = classification_to_json(classify::classify(u));

        json warnings = json::array();
        if (u.uniqueness_warning) {
            const int exponent = static_cast<int>(std::llround(1.0 - spec.gamma.real()));
            std::ostringstream os;
            os << "uniqueness fails: adding lambda * t^" << exponent
               << " * V(t,x) preserves the Cauchy data for any lambda "
               << "(V solves the companion problem with gamma' = 2 - gamma)";
            warnings.push_back(os.str());
        }
        report["warnings"] = warnings;

        if (opt.out_path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            io::write_json(opt.out_path, report);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_eval(const EvalOptions& opt) {
    try {
        const problem::ProblemSpec spec = io::load_spec(opt.spec_path);
        const solution::MonomialSolution u =
            solution::build_monomial(spec, opt.l, parse_root(opt.root));
        const std::vector<io::GridPoint> grid = io::load_grid(opt.grid_path);

        std::ostringstream csv;
        csv << "t_re,t_im,x_re,x_im,u_re,u_im,status\n";
        int succeeded = 0;
        for (const auto& pt : grid) {
            csv << io::format_double(pt.t.real()) << "," << io::format_double(pt.t.imag())
                << "," << io::format_double(pt.x.real()) << ","
                << io::format_double(pt.x.imag()) << ",";
            try {
                cplx value;
                if (pt.t == cplx(0.0, 0.0)) {
                    value = ipow(pt.x, opt.l);  // Cauchy datum, exactly
                } else {
                    value = solution::eval_monomial(u, pt.t, pt.x);
                }
                csv << io::format_double(value.real()) << ","
                    << io::format_double(value.imag()) << ",ok\n";
                ++succeeded;
            } catch (const std::exception& e) {
                csv << "nan,nan,error: " << e.what() << "\n";
            }
        }
        io::write_text(opt.out_path, csv.str());
        if (succeeded == 0 && !grid.empty()) {
            std::cerr << "eval: no grid point could be evaluated\n";
            return 4;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_series(const SeriesOptions& opt) {
    try {
        const problem::ProblemSpec spec = io::load_spec(opt.spec_path);
        const io::SeriesData data = io::load_series_data(opt.data_path);
        const std::vector<io::GridPoint> grid = io::load_grid(opt.grid_path);

        solution::SeriesSolution s;
        s.spec = spec;
        s.coefficients = data.coefficients;
        s.radius = data.radius;
        s.truncation = opt.truncation;
        if (!(opt.tail_tolerance > 0.0)) {
            throw InputError("--tail-tol must be positive");
        }
        s.tail_tolerance = opt.tail_tolerance;

        std::ostringstream csv;
        csv << "t_re,t_im,x_re,x_im,u_re,u_im,tail_estimate,status\n";
        int succeeded = 0;
        for (const auto& pt : grid) {
            csv << io::format_double(pt.t.real()) << "," << io::format_double(pt.t.imag())
                << "," << io::format_double(pt.x.real()) << ","
                << io::format_double(pt.x.imag()) << ",";
            try {
                const solution::SeriesValue v = solution::eval_series(s, pt.t, pt.x);
                csv << io::format_double(v.value.real()) << ","
                    << io::format_double(v.value.imag()) << ","
                    << io::format_double(v.tail_estimate) << ",ok\n";
                ++succeeded;
            } catch (const std::exception& e) {
                csv << "nan,nan,nan,error: " << e.what() << "\n";
            }
        }
        io::write_text(opt.out_path, csv.str());
        if (succeeded == 0 && !grid.empty()) {
            std::cerr << "series: no grid point could be evaluated\n";
            return 4;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "series: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_monodromy(const MonodromyOptions& opt) {
    try {
        const problem::ProblemSpec spec = io::load_spec(opt.spec_path);
        const solution::MonomialSolution u =
            solution::build_monomial(spec, opt.l, parse_root(opt.root));
        const auto [t, x] = parse_basepoint(opt.base);

        json report;
        report["spec"] = io::spec_to_json(spec);
        report["l"] = opt.l;
        report["basepoint"] = json{{"t", io::to_json(t)},
                                   {"x", io::to_json(x)},
                                   {"z", io::to_json(problem::eval_z(u.map, t, x))}};
        report["loop"] = opt.loop;

        if (opt.loop == "trivial") {
            const cplx z0 = problem::eval_z(u.map, t, x);
            const specfun::GhfParams p{u.dp.a, u.dp.b, u.dp.c};
            continuation::OdeState w0{specfun::ghf_eval(p, z0), specfun::ghf_deriv(p, z0)};
            const auto end = continuation::continue_ode(p, continuation::trivial_loop(z0), w0);
            const cplx before = ipow(x, u.l) * w0.value;
            const cplx after = ipow(x, u.l) * end.value;
            report["value_before"] = io::to_json(before);
            report["value_after"] = io::to_json(after);
            report["ode_relative_diff"] =
                std::abs(after - before) / std::max(1e-300, std::abs(before));
        } else {
            continuation::MonodromyResult res;
            if (opt.loop == "k2") {
                res = continuation::monodromy_k2(u, t, x);
            } else if (opt.loop == "k1") {
                res = continuation::monodromy_k1(u, t, x);
            } else {
                throw InputError("--loop must be k1, k2 or trivial");
            }
            report["value_before"] = io::to_json(res.value_before);
            report["value_after"] = io::to_json(res.value_after);
            json comps = json::array();
            for (const auto& comp : res.components) {
                comps.push_back(json{{"label", comp.label},
                                     {"value", io::to_json(comp.value)},
                                     {"multiplier", io::to_json(comp.multiplier)}});
            }
            report["components"] = comps;
            report["ode_value"] = io::to_json(res.ode_value);
            report["ode_relative_diff"] = res.ode_relative_diff;
        }

        if (opt.out_path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            io::write_json(opt.out_path, report);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "monodromy: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_verify(const VerifyOptions& opt) {
    try {
        const problem::ProblemSpec spec = io::load_spec(opt.spec_path);
        const solution::MonomialSolution u =
            solution::build_monomial(spec, opt.l, parse_root(opt.root));
        const std::vector<io::GridPoint> grid = io::load_grid(opt.points_path);
        const solution::Evaluatable fn = solution::evaluator(u);

        json points = json::array();
        double max_relative = 0.0;
        int succeeded = 0;
        for (const auto& pt : grid) {
            json entry{{"t", io::to_json(pt.t)}, {"x", io::to_json(pt.x)}};
            try {
                const verify::ResidualReport rep = verify::residual(fn, spec, pt.t, pt.x);
                entry["residual"] = io::to_json(rep.residual);
                entry["scale"] = rep.scale;
                entry["relative"] = rep.relative;
                max_relative = std::max(max_relative, rep.relative);
                ++succeeded;
            } catch (const std::exception& e) {
                entry["error"] = e.what();
            }
            points.push_back(entry);
        }

        json report;
        report["spec"] = io::spec_to_json(spec);
        report["l"] = opt.l;
        report["points"] = points;
        report["max_relative"] = max_relative;
        if (opt.out_path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            io::write_json(opt.out_path, report);
        }
        return succeeded > 0 || grid.empty() ? 0 : 4;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int main_entry(int argc, const char* const* argv) {
    CLI::App app{"hypercauchy: explicit hypergeometric solutions of singular "
                 "characteristic Cauchy problems"};
    app.require_subcommand(1);

    AnalyzeOptions an;
    auto* analyze = app.add_subcommand("analyze", "derive parameters and classify singularities");
    analyze->add_option("--spec", an.spec_path, "problem spec JSON")->required();
    analyze->add_option("--l", an.l, "data exponent l")->required();
    analyze->add_option("--root", an.root, "alpha root choice (plus|minus)");
    analyze->add_option("--out", an.out_path, "report output path");

    EvalOptions ev;
    auto* eval = app.add_subcommand("eval", "evaluate U_l on a grid, CSV output");
    eval->add_option("--spec", ev.spec_path)->required();
    eval->add_option("--l", ev.l)->required();
    eval->add_option("--root", ev.root);
    eval->add_option("--grid", ev.grid_path, "grid JSON")->required();
    eval->add_option("--out", ev.out_path, "CSV output path")->required();

    SeriesOptions se;
    auto* series = app.add_subcommand("series", "evaluate a series solution on a grid");
    series->add_option("--spec", se.spec_path)->required();
    series->add_option("--data", se.data_path, "data coefficients JSON")->required();
    series->add_option("--grid", se.grid_path)->required();
    series->add_option("--out", se.out_path)->required();
    series->add_option("--truncation", se.truncation, "term cap (default 500)");
    series->add_option("--tail-tol", se.tail_tolerance,
                       "relative tail tolerance (default 1e-10)");

    MonodromyOptions mo;
    auto* monodromy = app.add_subcommand("monodromy", "branch change along a loop");
    monodromy->add_option("--spec", mo.spec_path)->required();
    monodromy->add_option("--l", mo.l)->required();
    monodromy->add_option("--root", mo.root);
    monodromy->add_option("--base", mo.base, "basepoint t_re,t_im,x_re,x_im")->required();
    monodromy->add_option("--loop", mo.loop, "k1|k2|trivial")->required();
    monodromy->add_option("--out", mo.out_path);

    VerifyOptions ve;
    auto* verify_cmd = app.add_subcommand("verify", "residual oracle on a point panel");
    verify_cmd->add_option("--spec", ve.spec_path)->required();
    verify_cmd->add_option("--l", ve.l)->required();
    verify_cmd->add_option("--root", ve.root);
    verify_cmd->add_option("--points", ve.points_path)->required();
    verify_cmd->add_option("--out", ve.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (analyze->parsed()) return run_analyze(an);
    if (eval->parsed()) return run_eval(ev);
    if (series->parsed()) return run_series(se);
    if (monodromy->parsed()) return run_monodromy(mo);
    if (verify_cmd->parsed()) return run_verify(ve);
    return 2;
}

} // namespace hypercauchy::cli
