#pragma once

#include "hypercauchy/errors.hpp"
#include "hypercauchy/numeric.hpp"

namespace hypercauchy::problem {

/// Coefficients of the operator
///   L u = x^m (u_tt + (gamma/t) u_t) - t^n x^{p-2} (x^2 u_xx + A x u_x + B u)
/// with m, n, p non-negative integers and q = m - p + 2 > 0.
struct ProblemSpec {
    int m = 0;
    int n = 0;
    int p = 0;
    cplx gamma;
    cplx A;
    cplx B;

    ProblemSpec() = default;
    ProblemSpec(int m_, int n_, int p_, cplx gamma_, cplx A_, cplx B_);

    int q() const { return m - p + 2; }
};

enum class RootChoice { plus, minus };

/// Hypergeometric data derived from a spec and a data exponent l:
/// alpha solves rho^2 + (1-A) rho + B = 0, and
///   a = -(alpha+l)/q,  b = (1+alpha-A-l)/q,  c = (n+gamma+1)/(n+2).
struct DerivedParams {
    int q = 0;
    cplx alpha_plus;
    cplx alpha_minus;
    cplx a;
    cplx b;
    cplx c;
    int l = 0;
    RootChoice root_choice = RootChoice::plus;

    cplx alpha() const { return root_choice == RootChoice::plus ? alpha_plus : alpha_minus; }
};

struct DegeneracyFlags {
    bool gamma_negative_integer = false;  // gamma in {-1, -2, ...}
    bool c_integer = false;
    bool cab_integer = false;  // c - a - b integer
    bool ab_integer = false;   // a - b integer
};

/// The map z(t,x) = coefficient * t^{t_exponent} / x^{x_exponent} carrying
/// the initial curve to z=0, the characteristic cone to z=1 and the x=0
/// axis to z=infinity.
struct CharMap {
    double coefficient = 1.0;  // (q/(n+2))^2
    int t_exponent = 2;        // n+2
    int x_exponent = 1;        // q
};

DerivedParams derive_params(const ProblemSpec& spec, int l,
                            RootChoice root = RootChoice::plus);

CharMap char_map(const ProblemSpec& spec);

/// z(t,x); throws DivisionByZero for |x| < 1e-300.
cplx eval_z(const CharMap& map, cplx t, cplx x);

DegeneracyFlags degeneracy_flags(const ProblemSpec& spec, const DerivedParams& dp);

/// |x^q - (q/(n+2))^2 t^{n+2}|, the distance-like gauge to the
/// characteristic cone used by the convergence-domain predicate.
double char_distance(const ProblemSpec& spec, cplx t, cplx x);

} // namespace hypercauchy::problem
