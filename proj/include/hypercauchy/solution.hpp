#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "hypercauchy/branch.hpp"
#include "hypercauchy/problem.hpp"
#include "hypercauchy/specfun.hpp"

namespace hypercauchy::solution {

using problem::CharMap;
using problem::DegeneracyFlags;
using problem::DerivedParams;
using problem::ProblemSpec;
using problem::RootChoice;

/// Two-variable evaluatable, the common currency between the solution
/// constructors and the residual oracle.
using Evaluatable = std::function<cplx(cplx, cplx)>;

/// The solution x^l F(a,b,c,z(t,x)) with data u(0,x) = x^l, u_t(0,x) = 0.
struct MonomialSolution {
    ProblemSpec spec;
    int l = 0;
    DerivedParams dp;
    CharMap map;
    DegeneracyFlags flags;
    /// Set when gamma is a negative integer: the solution still exists but
    /// is no longer unique (a null-solution family can be added).
    bool uniqueness_warning = false;
};

/// Superposition sum(a_l U_l) for analytic data u0(x) = sum(a_l x^l) with
/// convergence radius `radius` (infinity encodes entire/polynomial data).
struct SeriesSolution {
    std::vector<cplx> coefficients;
    double radius = std::numeric_limits<double>::infinity();
    ProblemSpec spec;
    int truncation = 500;          // hard cap on the number of terms
    double tail_tolerance = 1e-10; // stop once the tail estimate drops below
                                   // this fraction of the partial sum
};

/// Result of a series evaluation with its empirical tail estimate.
struct SeriesValue {
    cplx value;
    double tail_estimate = 0.0;
    int terms_used = 0;
};

/// For gamma in {-1,-2,...}: the null solution t^{1-gamma} V(t,x) where V
/// solves the companion problem with gamma replaced by 2-gamma.  Adding any
/// multiple of it preserves the Cauchy data.
struct NullSolution {
    ProblemSpec spec;
    int exponent = 2;  // 1 - gamma >= 2
    MonomialSolution v;
};

MonomialSolution build_monomial(const ProblemSpec& spec, int l,
                                RootChoice root = RootChoice::plus);

cplx eval_monomial(const MonomialSolution& u, cplx t, cplx x,
                   const BranchContext& branch = BranchContext::principal());

/// Principal-branch evaluator closure for the residual oracle.
Evaluatable evaluator(const MonomialSolution& u);

bool in_convergence_domain(const SeriesSolution& s, cplx t, cplx x);

/// Truncated superposition with tail estimate from the empirical geometric
/// ratio of the last terms.  Throws OutsideDomain / NoConvergence.
SeriesValue eval_series(const SeriesSolution& s, cplx t, cplx x);

NullSolution build_null_solution(const ProblemSpec& spec, int l_v);

/// t^{1-gamma} V(t,x).
cplx eval_null(const NullSolution& ns, cplx t, cplx x);

Evaluatable evaluator(const NullSolution& ns);

/// [(x+t)^l + (x-t)^l] / 2, the closed form the wave-operator specs reduce to.
cplx dalembert_closed_form(int l, cplx t, cplx x);

/// True when F(a,b,c,x) <= G(c)G(a+b-c)/(G(a)G(b)) (1-x)^{c-a-b} within
/// 1e-12 slack.  Preconditions a >= b > c > 0 and x in [0,1).
bool majorant_bound_check(double a, double b, double c, double x);

/// max over l in [l_max/2, l_max] of |U_l(t,x)|^{1/l}; compared against the
/// growth bound 2^{2/q} char_distance^{1/q}.
double growth_rate_estimate(const ProblemSpec& spec, cplx t, cplx x, int l_max);

} // namespace hypercauchy::solution
