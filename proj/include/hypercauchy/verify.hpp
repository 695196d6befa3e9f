#pragma once

#include <functional>
#include <span>

#include "hypercauchy/problem.hpp"
#include "hypercauchy/solution.hpp"

namespace hypercauchy::verify {

using problem::ProblemSpec;
using solution::Evaluatable;
using solution::MonomialSolution;

/// Residual of the operator applied to a candidate solution at one point.
/// scale is the largest magnitude among the operator's individual terms, so
/// `relative` is meaningful across wildly different solution sizes.
struct ResidualReport {
    cplx t;
    cplx x;
    cplx residual;
    double scale = 0.0;
    double relative = 0.0;
};

/// k-th derivative (k = 1 or 2) of a holomorphic f by trapezoidal sampling
/// of the circle |zeta - z0| = radius.  32 nodes, doubled on disagreement;
/// spectrally accurate when f is holomorphic on the closed disk.
cplx contour_derivative(const std::function<cplx(cplx)>& f, cplx z0, int order,
                        double radius);

/// Apply the full operator
///   x^m (u_tt + (gamma/t) u_t) - t^n x^{p-2} (x^2 u_xx + A x u_x + B u)
/// to `u` at (t,x), with every derivative taken by contour integration.
ResidualReport residual(const Evaluatable& u, const ProblemSpec& spec, cplx t, cplx x);

/// max over the samples of |u(1e-4, x) - x^l|, combined with |u_t(0, x)|
/// computed by a t-contour of radius 1e-3 about t = 0.
double cauchy_data_check(const Evaluatable& u, int l, std::span<const cplx> x_samples);
double cauchy_data_check(const MonomialSolution& u, std::span<const cplx> x_samples);

} // namespace hypercauchy::verify
