#include "hypercauchy/classify.hpp"

#include <cmath>
#include <sstream>

#include "hypercauchy/continuation.hpp"

namespace hypercauchy::classify {

namespace {

std::string describe(cplx v) {
    std::ostringstream os;
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

} // namespace

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::a_nonpos_int: return "a_nonpos_int";
        case CaseTag::b_nonpos_int: return "b_nonpos_int";
        case CaseTag::ca_nonpos_int: return "ca_nonpos_int";
        case CaseTag::cb_nonpos_int: return "cb_nonpos_int";
        case CaseTag::generic: return "generic";
    }
    return "generic";
}

ClassificationReport classify(const MonomialSolution& u) {
    const auto& dp = u.dp;
    const double q = static_cast<double>(dp.q);
    const double l = static_cast<double>(u.l);
    ClassificationReport rep;
    std::ostringstream wit;

    const cplx l_plus_aq = l + dp.a * q;
    const cplx l_plus_bq = l + dp.b * q;

    if (near_nonpos_int(dp.a)) {
        rep.case_tag = CaseTag::a_nonpos_int;
        rep.holomorphic_K1 = near_nonneg_int(l_plus_aq);
        rep.holomorphic_K2 = true;
        wit << "a = " << describe(dp.a) << " terminates the series; l+aq = "
            << describe(l_plus_aq);
    } else if (near_nonpos_int(dp.b)) {
        rep.case_tag = CaseTag::b_nonpos_int;
        rep.holomorphic_K1 = near_nonneg_int(l_plus_bq);
        rep.holomorphic_K2 = true;
        wit << "b = " << describe(dp.b) << " terminates the series; l+bq = "
            << describe(l_plus_bq);
    } else if (near_nonpos_int(dp.c - dp.a)) {
        rep.case_tag = CaseTag::ca_nonpos_int;
        rep.holomorphic_K1 = near_nonneg_int(l_plus_bq);
        rep.holomorphic_K2 = false;
        wit << "c-a = " << describe(dp.c - dp.a)
            << " terminates the Pfaff-transformed series; l+bq = " << describe(l_plus_bq)
            << "; cone exponent c-a-b = " << describe(dp.c - dp.a - dp.b);
    } else if (near_nonpos_int(dp.c - dp.b)) {
        rep.case_tag = CaseTag::cb_nonpos_int;
        rep.holomorphic_K1 = near_nonneg_int(l_plus_aq);
        rep.holomorphic_K2 = false;
        wit << "c-b = " << describe(dp.c - dp.b)
            << " terminates the Pfaff-transformed series; l+aq = " << describe(l_plus_aq)
            << "; cone exponent c-a-b = " << describe(dp.c - dp.a - dp.b);
    } else {
        rep.case_tag = CaseTag::generic;
        // Both axis exponents -alpha and 1+alpha-A (= -alpha_other) must be
        // non-negative integers.
        const bool plus_ok = near_nonneg_int(-dp.alpha_plus);
        const bool minus_ok = near_nonneg_int(-dp.alpha_minus);
        rep.holomorphic_K1 = plus_ok && minus_ok;
        rep.holomorphic_K2 = false;
        wit << "generic parameters; axis exponents -alpha = " << describe(-dp.alpha_plus)
            << ", " << describe(-dp.alpha_minus)
            << "; cone exponent c-a-b = " << describe(dp.c - dp.a - dp.b);
    }

    if (!rep.holomorphic_K2) {
        const cplx cab = dp.c - dp.a - dp.b;
        if (near_integer(cab)) {
            // Logarithmic lattice: the axis verdict above stands, but the
            // cone verdict would need the excluded connection formula.
            rep.k2_decidable = false;
            wit << "; c-a-b on the integer lattice, cone verdict undecided"
                << " (logarithmic case out of scope)";
        } else {
            rep.k2_ramification_exponent = cab;
        }
    }
    rep.witness = wit.str();
    return rep;
}

std::pair<cplx, cplx> pfaff_lastterm_exponents(const MonomialSolution& u) {
    if (!near_nonpos_int(u.dp.c - u.dp.a)) {
        throw PreconditionViolation("dominant-term exponents need c-a in {0,-1,-2,...}");
    }
    const double q = static_cast<double>(u.dp.q);
    return {static_cast<double>(u.l) + q * u.dp.b, u.dp.c - u.dp.a - u.dp.b};
}

double ramification_witness(const MonomialSolution& u, CharCurve curve) {
    const cplx z0 = (curve == CharCurve::K2) ? cplx(0.5, 0.0) : cplx(-2.0, 0.0);
    // Solve for a (t, x) pair mapping onto the probe basepoint.
    const cplx x{1.0, 0.0};
    const cplx target = z0 / u.map.coefficient;
    const cplx t = std::exp(std::log(target) / static_cast<double>(u.map.t_exponent));

    const BranchContext loop = (curve == CharCurve::K2)
                                   ? BranchContext{LoopLetter::around_1_pos}
                                   : BranchContext{LoopLetter::around_inf_pos};
    const cplx before = continuation::continue_value(u, t, x, BranchContext::principal());
    const cplx after = continuation::continue_value(u, t, x, loop);
    return std::abs(after - before) / std::max(1e-300, std::abs(before));
}

} // namespace hypercauchy::classify
