#include "hypercauchy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hypercauchy::verify {

namespace {

struct RingSum {
    cplx derivative;
    double cauchy_bound;  // k! max|f| / r^k, the natural magnitude scale
};

RingSum cauchy_ring_sum(const std::function<cplx(cplx)>& f, cplx z0, int order,
                        double radius, int nodes) {
    // k! / (M r^k) * sum_j f(z0 + r e^{i theta_j}) e^{-i k theta_j}
    cplx acc{0.0, 0.0};
    double fmax = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        const cplx w = std::polar(1.0, theta);
        const cplx fv = f(z0 + radius * w);
        fmax = std::max(fmax, std::abs(fv));
        acc += fv * std::polar(1.0, -order * theta);
    }
    const double kfact = (order == 2) ? 2.0 : 1.0;
    const double scale = kfact / std::pow(radius, order);
    return {acc * (scale / static_cast<double>(nodes)), fmax * scale};
}

// Distances from t (resp. x) to the nearest point of the characteristic
// cone along the other variable held fixed, i.e. to the roots of
// tau^{n+2} = x^q (n+2)^2 / q^2 (resp. xi^q = t^{n+2} q^2 / (n+2)^2).
double distance_to_cone_in_t(const ProblemSpec& spec, cplx t, cplx x) {
    const int k = spec.n + 2;
    const problem::CharMap map = problem::char_map(spec);
    const cplx target = ipow(x, map.x_exponent) / map.coefficient;
    const double r = std::pow(std::abs(target), 1.0 / k);
    const double phi0 = std::arg(target) / k;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
        const cplx root = std::polar(r, phi0 + 2.0 * kPi * j / k);
        best = std::min(best, std::abs(t - root));
    }
    return best;
}

double distance_to_cone_in_x(const ProblemSpec& spec, cplx t, cplx x) {
    const int k = spec.q();
    const problem::CharMap map = problem::char_map(spec);
    const cplx target = map.coefficient * ipow(t, map.t_exponent);
    const double r = std::pow(std::abs(target), 1.0 / k);
    const double phi0 = std::arg(target) / k;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
        const cplx root = std::polar(r, phi0 + 2.0 * kPi * j / k);
        best = std::min(best, std::abs(x - root));
    }
    return best;
}

constexpr double kMinRadius = 1e-6;

} // namespace

cplx contour_derivative(const std::function<cplx(cplx)>& f, cplx z0, int order,
                        double radius) {
    if (order != 1 && order != 2) {
        throw PreconditionViolation("contour derivative supports orders 1 and 2");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw PreconditionViolation("contour derivative requires a positive radius");
    }
    const RingSum r32 = cauchy_ring_sum(f, z0, order, radius, 32);
    const RingSum r64 = cauchy_ring_sum(f, z0, order, radius, 64);
    // Agreement tolerance: relative, with an absolute floor at the rounding
    // noise of the quadrature (measured against the Cauchy-estimate scale).
    const auto agree = [](const RingSum& a, const RingSum& b) {
        const double floor = 1e-12 * std::max(a.cauchy_bound, b.cauchy_bound);
        return std::abs(a.derivative - b.derivative) <=
               1e-8 * std::max(std::abs(a.derivative), std::abs(b.derivative)) + floor;
    };
    if (agree(r32, r64)) return r64.derivative;
    // One more doubling before giving up: slow node convergence means a
    // singularity intrudes on the sampling disk.
    const RingSum r128 = cauchy_ring_sum(f, z0, order, radius, 128);
    if (agree(r64, r128)) return r128.derivative;
    throw SingularityTooClose("contour derivative did not stabilize under node doubling");
}

ResidualReport residual(const Evaluatable& u, const ProblemSpec& spec, cplx t, cplx x) {
    if (std::abs(t) < 1e-12 || std::abs(x) < 1e-12) {
        throw PreconditionViolation("residual point must be off t = 0 and x = 0");
    }
    const double rt =
        std::min({0.1, 0.5 * std::abs(t), 0.25 * distance_to_cone_in_t(spec, t, x)});
    const double rx =
        std::min({0.1, 0.5 * std::abs(x), 0.25 * distance_to_cone_in_x(spec, t, x)});
    if (rt < kMinRadius || rx < kMinRadius) {
        throw SingularityTooClose("residual point too close to the characteristic set");
    }

    const auto in_t = [&](cplx tau) { return u(tau, x); };
    const auto in_x = [&](cplx xi) { return u(t, xi); };

    const cplx u_val = u(t, x);
    const cplx u_t = contour_derivative(in_t, t, 1, rt);
    const cplx u_tt = contour_derivative(in_t, t, 2, rt);
    const cplx u_x = contour_derivative(in_x, x, 1, rx);
    const cplx u_xx = contour_derivative(in_x, x, 2, rx);

    const cplx xm = ipow(x, spec.m);
    const cplx tn_xp = ipow(t, spec.n) * ipow(x, spec.p - 2);

    const cplx term_tt = xm * u_tt;
    const cplx term_t = xm * (spec.gamma / t) * u_t;
    const cplx term_xx = -tn_xp * x * x * u_xx;
    const cplx term_x = -tn_xp * spec.A * x * u_x;
    const cplx term_0 = -tn_xp * spec.B * u_val;

    ResidualReport rep;
    rep.t = t;
    rep.x = x;
    rep.residual = term_tt + term_t + term_xx + term_x + term_0;
    rep.scale = std::max({std::abs(term_tt), std::abs(term_t), std::abs(term_xx),
                          std::abs(term_x), std::abs(term_0), 1e-300});
    rep.relative = std::abs(rep.residual) / rep.scale;
    return rep;
}

double cauchy_data_check(const Evaluatable& u, int l, std::span<const cplx> x_samples) {
    constexpr double kTSmall = 1e-4;
    constexpr double kContourRadius = 1e-3;
    double worst = 0.0;
    for (const cplx x : x_samples) {
        const cplx data_err = u(kTSmall, x) - ipow(x, l);
        worst = std::max(worst, std::abs(data_err));
        const auto in_t = [&](cplx tau) { return u(tau, x); };
        const cplx ut0 = contour_derivative(in_t, cplx(0.0, 0.0), 1, kContourRadius);
        worst = std::max(worst, std::abs(ut0));
    }
    return worst;
}

double cauchy_data_check(const MonomialSolution& u, std::span<const cplx> x_samples) {
    return cauchy_data_check(solution::evaluator(u), u.l, x_samples);
}

} // namespace hypercauchy::verify
