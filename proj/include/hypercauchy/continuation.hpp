#pragma once

#include <string>
#include <vector>

#include "hypercauchy/solution.hpp"
#include "hypercauchy/specfun.hpp"

namespace hypercauchy::continuation {

using problem::DerivedParams;
using solution::MonomialSolution;
using specfun::GhfParams;

enum class LoopTarget { K1, K2, trivial };

/// Closed polyline in the z-plane.  Every segment must stay at least 1e-3
/// away from the singular points 0 and 1; first and last vertex coincide.
struct LoopPath {
    cplx basepoint_z;
    std::vector<cplx> vertices;
    LoopTarget target = LoopTarget::trivial;

    /// Validates the closure and margin invariants; throws InputError.
    void validate() const;
};

/// Value and z-derivative of a solution branch at a point.
struct OdeState {
    cplx value;
    cplx derivative;
};

/// One branch component of a monodromy decomposition and the factor the
/// loop multiplies it by.
struct MonodromyComponent {
    std::string label;
    cplx value;
    cplx multiplier;
};

struct MonodromyResult {
    cplx value_before;
    cplx value_after;
    std::vector<MonodromyComponent> components;
    cplx ode_value;           // independent ODE continuation of the same loop
    double ode_relative_diff = 0.0;
};

/// Loop factories.  Positive orientation about z = 1 is counterclockwise;
/// positive orientation about infinity is a large circle enclosing both
/// finite singular points traversed clockwise.
LoopPath loop_around_one(cplx basepoint, bool positive);
LoopPath loop_around_infinity(cplx basepoint, bool positive);
LoopPath trivial_loop(cplx basepoint);

/// Continue a solution of the hypergeometric equation
///   z(1-z) y'' + [c - (1+a+b) z] y' - a b y = 0
/// along the path by adaptive recentered Taylor series (step at most 0.4 of
/// the distance to the nearest singularity; local tolerance 1e-15).
OdeState continue_ode(const GhfParams& p, const LoopPath& path, OdeState w0);
OdeState continue_ode(const DerivedParams& dp, const LoopPath& path, OdeState w0);

/// Same integrator along the open straight segment from `from` to `to`.
OdeState transport(const GhfParams& p, cplx from, cplx to, OdeState w0);

/// Monodromy of U_l under one positive loop about the characteristic cone
/// (z-plane loop about z = 1).  Basepoint must map to z in (0,1) on the real
/// axis.  The analytic-at-1 component is fixed; the (1-z)^{c-a-b} component
/// is multiplied by e^{2 pi i (c-a-b)}.  Cross-validated against the ODE
/// oracle (throws VerificationFailure beyond 1e-6 relative).
MonodromyResult monodromy_k2(const MonomialSolution& u, cplx t, cplx x);

/// Monodromy of U_l under one positive loop about the x = 0 axis image
/// (z-plane loop about infinity).  Basepoint must satisfy |1 - z| > 1.
/// The two 1/(1-z)-basis components pick up e^{2 pi i a} and e^{2 pi i b}.
MonodromyResult monodromy_k1(const MonomialSolution& u, cplx t, cplx x);

/// Value of U_l on the branch reached by the loop word, composing the
/// closed-form branch actions letter by letter.
cplx continue_value(const MonomialSolution& u, cplx t, cplx x,
                    const BranchContext& branch);

} // namespace hypercauchy::continuation
