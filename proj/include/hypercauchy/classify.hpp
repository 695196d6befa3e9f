#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hypercauchy/solution.hpp"

namespace hypercauchy::classify {

using solution::MonomialSolution;

/// Which of the ordered parameter cases decided the verdict.  Throughout,
/// "non-positive integer" means {0, -1, -2, ...} and membership is tested
/// within kTauInt.
enum class CaseTag {
    a_nonpos_int,
    b_nonpos_int,
    ca_nonpos_int,  // c - a
    cb_nonpos_int,  // c - b
    generic,
};

const char* case_tag_name(CaseTag tag);

/// Holomorphy verdicts for U_l across the two characteristic curves:
/// K1 is the axis x = 0, K2 the cone x^q = (q/(n+2))^2 t^{n+2}.
///
/// In the non-terminating cases the cone verdict rests on the branch
/// exponent c-a-b being non-integer; when the parameters land on that
/// integer lattice (a logarithmic case, out of scope) the axis verdict is
/// still decided but k2_decidable is cleared and holomorphic_K2 must not be
/// relied on.
struct ClassificationReport {
    CaseTag case_tag = CaseTag::generic;
    bool holomorphic_K1 = false;
    bool holomorphic_K2 = false;
    bool k2_decidable = true;
    /// c-a-b, present exactly when the solution is ramified around the cone.
    std::optional<cplx> k2_ramification_exponent;
    std::string witness;
};

/// Ordered case analysis on the derived parameters: terminating cases are
/// entire across the cone; the remaining cases carry a (1-z)^{c-a-b} branch
/// there, and holomorphy across the axis reduces to integer conditions on
/// the exponents l+aq, l+bq or on the alpha roots.
ClassificationReport classify(const MonomialSolution& u);

/// For c-a = -N: exponent pair (l+qb, c-a-b) of the dominant term
/// C t^{N(n+2)} x^{l+qb} [x^q - (q/(n+2))^2 t^{n+2}]^{c-a-b}.
std::pair<cplx, cplx> pfaff_lastterm_exponents(const MonomialSolution& u);

enum class CharCurve { K1, K2 };

/// Relative change of the value after one positive loop around the curve's
/// z-plane image, at a generic basepoint.  Zero (within 1e-8) exactly for
/// branches classified holomorphic across the cone.  For the axis the
/// witness ignores the x^l prefactor's own winding and is advisory.
double ramification_witness(const MonomialSolution& u, CharCurve curve);

} // namespace hypercauchy::classify
