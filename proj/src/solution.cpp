#include "hypercauchy/solution.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace hypercauchy::solution {

MonomialSolution build_monomial(const ProblemSpec& spec, int l, RootChoice root) {
    MonomialSolution u;
    u.spec = spec;
    u.l = l;
    u.dp = problem::derive_params(spec, l, root);
    u.map = problem::char_map(spec);
    u.flags = problem::degeneracy_flags(spec, u.dp);
    u.uniqueness_warning = u.flags.gamma_negative_integer;
    return u;
}

cplx eval_monomial(const MonomialSolution& u, cplx t, cplx x, const BranchContext& branch) {
    const cplx z = problem::eval_z(u.map, t, x);
    const specfun::GhfParams p{u.dp.a, u.dp.b, u.dp.c};
    return ipow(x, u.l) * specfun::ghf_eval(p, z, branch);
}

Evaluatable evaluator(const MonomialSolution& u) {
    return [u](cplx t, cplx x) { return eval_monomial(u, t, x); };
}

bool in_convergence_domain(const SeriesSolution& s, cplx t, cplx x) {
    if (std::isinf(s.radius)) return true;  // entire data convention
    const double bound = std::pow(s.radius, s.spec.q()) / 4.0;
    return problem::char_distance(s.spec, t, x) < bound;
}

SeriesValue eval_series(const SeriesSolution& s, cplx t, cplx x) {
    if (!in_convergence_domain(s, t, x)) {
        throw OutsideDomain("series evaluation point outside the guaranteed convergence domain");
    }
    const int max_terms =
        std::min<int>(s.truncation, static_cast<int>(s.coefficients.size()) - 1);

    SeriesValue out;
    cplx sum{0.0, 0.0};
    std::deque<double> window;  // magnitudes of the most recent terms
    constexpr int kRatioWindow = 10;
    const double tail_tol = s.tail_tolerance;

    // Empirical geometric ratio across the window halves; robust against
    // zero coefficients interleaved in the data.
    const auto half_maxima = [&window]() {
        const std::size_t half = window.size() / 2;
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < window.size(); ++i) {
            (i < half ? lo : hi) = std::max(i < half ? lo : hi, window[i]);
        }
        return std::pair<double, double>(lo, hi);
    };

    int l = 0;
    for (; l <= max_terms; ++l) {
        cplx term{0.0, 0.0};
        if (s.coefficients[l] != cplx(0.0, 0.0)) {
            const MonomialSolution u = build_monomial(s.spec, l);
            term = s.coefficients[l] * eval_monomial(u, t, x);
        }
        sum += term;
        window.push_back(std::abs(term));
        if (static_cast<int>(window.size()) > kRatioWindow) window.pop_front();

        if (static_cast<int>(window.size()) == kRatioWindow) {
            const auto [lo, hi] = half_maxima();
            if (lo == 0.0 && hi == 0.0) {
                // Exactly zero window: polynomial data exhausted.
                out.tail_estimate = 0.0;
                out.value = sum;
                out.terms_used = l + 1;
                return out;
            }
            if (lo > 0.0 && hi > 0.0) {
                const double ratio = std::pow(hi / lo, 2.0 / kRatioWindow);
                if (ratio < 1.0) {
                    const double tail = hi * ratio / (1.0 - ratio);
                    if (tail < tail_tol * std::max(1e-300, std::abs(sum))) {
                        out.tail_estimate = tail;
                        out.value = sum;
                        out.terms_used = l + 1;
                        return out;
                    }
                }
            }
        }
    }

    // Ran out of terms: report, or reject if the tail is clearly not decaying.
    if (static_cast<int>(window.size()) >= 4) {
        const auto [lo, hi] = half_maxima();
        if (lo > 0.0 && hi > 0.0) {
            const double ratio = std::pow(hi / lo, 2.0 / static_cast<double>(window.size()));
            if (ratio >= 1.0) {
                throw NoConvergence("series terms are not decaying (empirical ratio >= 1)");
            }
            out.tail_estimate = hi * ratio / (1.0 - ratio);
        }
    }
    out.value = sum;
    out.terms_used = l;
    return out;
}

NullSolution build_null_solution(const ProblemSpec& spec, int l_v) {
    if (!near_neg_int(spec.gamma)) {
        throw NotDegenerate("null solutions exist only for gamma in {-1, -2, ...}");
    }
    NullSolution ns;
    ns.spec = spec;
    ns.exponent = static_cast<int>(std::llround(1.0 - spec.gamma.real()));
    ProblemSpec companion = spec;
    companion.gamma = 2.0 - spec.gamma;
    ns.v = build_monomial(companion, l_v);
    return ns;
}

cplx eval_null(const NullSolution& ns, cplx t, cplx x) {
    return ipow(t, ns.exponent) * eval_monomial(ns.v, t, x);
}

Evaluatable evaluator(const NullSolution& ns) {
    return [ns](cplx t, cplx x) { return eval_null(ns, t, x); };
}

cplx dalembert_closed_form(int l, cplx t, cplx x) {
    return 0.5 * (ipow(x + t, l) + ipow(x - t, l));
}

bool majorant_bound_check(double a, double b, double c, double x) {
    if (!(a >= b && b > c && c > 0.0)) {
        throw PreconditionViolation("majorant bound requires a >= b > c > 0");
    }
    if (!(x >= 0.0 && x < 1.0)) {
        throw PreconditionViolation("majorant bound requires x in [0, 1)");
    }
    const specfun::GhfParams p{cplx(a, 0.0), cplx(b, 0.0), cplx(c, 0.0)};
    const double lhs = specfun::ghf_eval(p, cplx(x, 0.0)).real();
    const double constant =
        (specfun::gamma(cplx(c, 0.0)) * specfun::gamma(cplx(a + b - c, 0.0)) /
         (specfun::gamma(cplx(a, 0.0)) * specfun::gamma(cplx(b, 0.0))))
            .real();
    const double rhs = constant * std::pow(1.0 - x, c - a - b);
    return lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs));
}

double growth_rate_estimate(const ProblemSpec& spec, cplx t, cplx x, int l_max) {
    if (l_max < 1) throw PreconditionViolation("growth estimate requires l_max >= 1");
    const int l_lo = std::max(1, l_max / 2);
    double estimate = 0.0;
    for (int l = l_lo; l <= l_max; ++l) {
        const MonomialSolution u = build_monomial(spec, l);
        const double mag = std::abs(eval_monomial(u, t, x));
        estimate = std::max(estimate, std::pow(mag, 1.0 / static_cast<double>(l)));
    }
    return estimate;
}

} // namespace hypercauchy::solution
