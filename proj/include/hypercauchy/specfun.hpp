#pragma once

#include "hypercauchy/branch.hpp"
#include "hypercauchy/errors.hpp"
#include "hypercauchy/numeric.hpp"

namespace hypercauchy::specfun {

/// Parameter triple of the Gauss hypergeometric function F(a,b,c,z).
/// c must stay away from the non-positive integers.
struct GhfParams {
    cplx a;
    cplx b;
    cplx c;
};

/// Constants of the two connection formulas linking the local solutions at
/// z = 0 with those at z = 1 (A1, A2) and at z = infinity (A3, A4):
///   A1 = G(c)G(c-a-b) / (G(c-a)G(c-b))   A2 = G(c)G(a+b-c) / (G(a)G(b))
///   A3 = G(c)G(b-a)   / (G(b)G(c-a))     A4 = G(c)G(a-b)   / (G(a)G(c-b))
/// A pole in a denominator makes the constant an exact zero.  A pole in a
/// numerator makes that constant unusable: its value is NaN, its flag is
/// cleared, and the checked accessor raises DegenerateParams naming it.
struct ConnectionConstants {
    cplx A1;
    cplx A2;
    cplx A3;
    cplx A4;
    bool A1_finite = true;
    bool A2_finite = true;
    bool A3_finite = true;
    bool A4_finite = true;

    cplx a1() const;
    cplx a2() const;
    cplx a3() const;
    cplx a4() const;
};

/// Values of the two standard local solutions at a regular point:
/// w1 = F(a,b,c,z) with w1(0) = 1, and w2 = z^{1-c} F(a-c+1, b-c+1, 2-c, z).
struct FundamentalPair {
    cplx w1_value;
    cplx w2_value;
};

/// Complex gamma function.  Lanczos rational approximation on Re z >= 1/2,
/// reflection formula otherwise.  Relative error below 1e-12 for |z| <= 50
/// away from the poles.  Throws PoleError within kTauInt of 0, -1, -2, ...
cplx gamma(cplx z);

/// Rising factorial (lam)_i = lam (lam+1) ... (lam+i-1); exact zeros are
/// preserved by computing the direct product.
cplx pochhammer(cplx lam, int i);

/// Partial sum of the defining series with a geometric tail bound below
/// tol * |sum|.  Terminating series (a or b a non-positive integer) are
/// summed exactly.  Convergence is the caller's responsibility for
/// |z| > 0.75; throws NoConvergence after 10000 terms.
cplx ghf_series(const GhfParams& p, cplx z, double tol = 1e-15);

/// F(a,b,c,z) anywhere off z = 1, on the branch described by `branch`
/// (principal when the loop word is empty).  Dispatch: direct series for
/// |z| <= 1/2, the Pfaff transform for |z/(z-1)| <= 1/2, otherwise the
/// z -> 1-z or z -> 1/(1-z) connection formula according to |1-z| <= 1.
/// On the cut (z real > 1) values are defined by continuity from Im z > 0.
cplx ghf_eval(const GhfParams& p, cplx z,
              const BranchContext& branch = BranchContext::principal());

/// d/dz F(a,b,c,z) via the contiguous relation F' = (ab/c) F(a+1,b+1,c+1,z).
cplx ghf_deriv(const GhfParams& p, cplx z,
               const BranchContext& branch = BranchContext::principal());

/// All four connection constants; singular ones are flagged, not thrown
/// (both formulas stay usable one pair at a time).
ConnectionConstants connection_constants(const GhfParams& p);

/// Residual of the quadratic-argument identity
///   F(a, a+1/2, 1/2, z^2) = [(1+z)^{-2a} + (1-z)^{-2a}] / 2
/// for |z| < 1.  Used to validate the evaluation kernel.
double dalembert_identity_check(cplx a, cplx z);

/// Values of the two local solutions w1, w2 at z (c non-integer).
FundamentalPair fundamental_pair(const GhfParams& p, cplx z);

namespace detail {

/// log(1-z) with the cut fixed by continuity from Im z > 0: for z real > 1
/// the argument of 1-z is taken as -pi.  `winding` adds 2*pi*i per unit.
cplx log_one_minus(cplx z, int winding = 0);

/// (1-z)^s on the branch selected by `winding` (see log_one_minus).
cplx pow_one_minus(cplx z, cplx s, int winding = 0);

/// Degree of the terminating series when a parameter is within kTauInt of a
/// non-positive integer; -1 otherwise.
int termination_degree(cplx v);

/// The two terms of the z -> 1-z connection formula at z, inner series on
/// the principal branch, the (1-z)^{c-a-b} prefactor of the second term
/// split off so callers can wind it:
///   F = analytic + power_factor * (1-z)^{exponent}.
struct F1Pieces {
    cplx analytic;      // A1 F(a, b, a+b-c+1, 1-z)
    cplx power_factor;  // A2 F(c-a, c-b, c-a-b+1, 1-z)
    cplx exponent;      // c-a-b
};
F1Pieces f1_pieces(const GhfParams& p, cplx z);

/// The two terms of the z -> 1/(1-z) connection formula at z, the
/// (1-z)^{-a} and (1-z)^{-b} prefactors split off:
///   F = coef_a * (1-z)^{-a} + coef_b * (1-z)^{-b}.
struct F2Pieces {
    cplx coef_a;  // A3 F(a, c-b, 1+a-b, 1/(1-z))
    cplx coef_b;  // A4 F(b, c-a, 1-a+b, 1/(1-z))
};
F2Pieces f2_pieces(const GhfParams& p, cplx z);

} // namespace detail

} // namespace hypercauchy::specfun
