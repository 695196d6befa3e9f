#include "hypercauchy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypercauchy::specfun {

namespace {

std::string fmt_cplx(cplx z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

// Rational Lanczos approximation for double precision, g = 6.0246800407...
// (the 13-term coefficient set; relative error ~1e-16 on the real axis).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

constexpr double kLanczosDen[13] = {
    0.0,        39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

cplx lanczos_sum(cplx z) {
    cplx num{0.0, 0.0};
    cplx den{0.0, 0.0};
    for (int i = 12; i >= 0; --i) {
        num = num * z + kLanczosNum[i];
        den = den * z + kLanczosDen[i];
    }
    return num / den;
}

// Gamma on Re z >= 1/2 (no pole handling needed there).
cplx gamma_right_half(cplx z) {
    const cplx t = z + (kLanczosG - 0.5);
    return lanczos_sum(z) * std::exp((z - 0.5) * std::log(t) - t);
}

} // namespace

cplx gamma(cplx z) {
    if (near_nonpos_int(z)) {
        throw PoleError("gamma pole at z = " + fmt_cplx(z));
    }
    if (z.real() < 0.5) {
        // Reflection: gamma(z) gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_right_half(1.0 - z));
    }
    return gamma_right_half(z);
}

cplx pochhammer(cplx lam, int i) {
    if (i < 0) throw PreconditionViolation("pochhammer index must be non-negative");
    cplx prod{1.0, 0.0};
    for (int k = 0; k < i; ++k) {
        prod *= lam + static_cast<double>(k);
    }
    return prod;
}

namespace detail {

int termination_degree(cplx v) {
    if (!near_nonpos_int(v)) return -1;
    return static_cast<int>(-std::llround(v.real()));
}

cplx log_one_minus(cplx z, int winding) {
    const cplx w = 1.0 - z;
    cplx lg;
    if (z.imag() == 0.0 && z.real() > 1.0) {
        // On the cut: approach from Im z > 0, so arg(1-z) -> -pi.
        lg = cplx(std::log(std::abs(w.real())), -kPi);
    } else {
        lg = std::log(w);
    }
    return lg + cplx(0.0, 2.0 * kPi * winding);
}

cplx pow_one_minus(cplx z, cplx s, int winding) {
    if (s == cplx(0.0, 0.0)) return {1.0, 0.0};
    return std::exp(s * log_one_minus(z, winding));
}

} // namespace detail

namespace {

void validate_c(const GhfParams& p) {
    if (near_nonpos_int(p.c)) {
        throw DegenerateParams("hypergeometric c parameter at a non-positive integer: c = " +
                               fmt_cplx(p.c));
    }
}

int series_termination(const GhfParams& p) {
    const int na = detail::termination_degree(p.a);
    const int nb = detail::termination_degree(p.b);
    if (na >= 0 && nb >= 0) return std::min(na, nb);
    return std::max(na, nb);
}

cplx series_terminating(const GhfParams& p, cplx z, int degree) {
    cplx sum{1.0, 0.0};
    cplx term{1.0, 0.0};
    for (int i = 0; i < degree; ++i) {
        const double di = static_cast<double>(i);
        term *= (p.a + di) * (p.b + di) / ((p.c + di) * (di + 1.0)) * z;
        sum += term;
    }
    return sum;
}

cplx series_infinite(const GhfParams& p, cplx z, double tol) {
    constexpr int kMaxTerms = 10000;
    cplx sum{1.0, 0.0};
    cplx term{1.0, 0.0};
    int small_run = 0;
    for (int i = 0; i < kMaxTerms; ++i) {
        const double di = static_cast<double>(i);
        const cplx ratio = (p.a + di) * (p.b + di) / ((p.c + di) * (di + 1.0)) * z;
        term *= ratio;
        sum += term;
        const double tmag = std::abs(term);
        const double smag = std::abs(sum);
        if (tmag <= tol * smag) {
            ++small_run;
            // Geometric tail estimate from the local term ratio.
            const double r = std::abs(ratio);
            if (small_run >= 2 && r < 1.0 && tmag * r / (1.0 - r) <= tol * smag) {
                return sum;
            }
        } else {
            small_run = 0;
        }
    }
    throw NoConvergence("hypergeometric series: 10000 terms without reaching tolerance at z = " +
                        fmt_cplx(z));
}

// Forward declaration for the mutually recursive dispatcher.
cplx eval_dispatch(const GhfParams& p, cplx z, int w1, int winf, int depth);

cplx eval_pfaff(const GhfParams& p, cplx z, int depth) {
    // F(a,b,c,z) = (1-z)^{-b} F(c-a, b, c, z/(z-1)).
    const cplx w = z / (z - 1.0);
    const GhfParams q{p.c - p.a, p.b, p.c};
    return detail::pow_one_minus(z, -p.b) * eval_dispatch(q, w, 0, 0, depth + 1);
}

using detail::F1Pieces;
using detail::F2Pieces;

// Both terms of the z -> 1-z connection formula, prefactor split off so the
// caller can apply a branch winding to it.
F1Pieces eval_f1_pieces(const GhfParams& p, cplx z, int depth) {
    const cplx cab = p.c - p.a - p.b;
    if (near_integer(cab)) {
        throw DegenerateParams("z -> 1-z connection formula needs c-a-b non-integer; c-a-b = " +
                               fmt_cplx(cab));
    }
    F1Pieces out;
    out.exponent = cab;
    // A1 = G(c)G(c-a-b)/(G(c-a)G(c-b)); a denominator pole kills the term.
    if (near_nonpos_int(p.c - p.a) || near_nonpos_int(p.c - p.b)) {
        out.analytic = {0.0, 0.0};
    } else {
        const cplx A1 = gamma(p.c) * gamma(cab) / (gamma(p.c - p.a) * gamma(p.c - p.b));
        const GhfParams q1{p.a, p.b, p.a + p.b - p.c + 1.0};
        out.analytic = A1 * eval_dispatch(q1, 1.0 - z, 0, 0, depth + 1);
    }
    // A2 = G(c)G(a+b-c)/(G(a)G(b)).
    if (near_nonpos_int(p.a) || near_nonpos_int(p.b)) {
        out.power_factor = {0.0, 0.0};
    } else {
        const cplx A2 = gamma(p.c) * gamma(-cab) / (gamma(p.a) * gamma(p.b));
        const GhfParams q2{p.c - p.a, p.c - p.b, cab + 1.0};
        out.power_factor = A2 * eval_dispatch(q2, 1.0 - z, 0, 0, depth + 1);
    }
    return out;
}

// Both terms of the z -> 1/(1-z) connection formula, prefactors split off.
F2Pieces eval_f2_pieces(const GhfParams& p, cplx z, int depth) {
    const cplx ab = p.a - p.b;
    if (near_integer(ab)) {
        throw DegenerateParams("z -> 1/(1-z) connection formula needs a-b non-integer; a-b = " +
                               fmt_cplx(ab));
    }
    const cplx w = 1.0 / (1.0 - z);
    F2Pieces out;
    if (near_nonpos_int(p.b) || near_nonpos_int(p.c - p.a)) {
        out.coef_a = {0.0, 0.0};
    } else {
        const cplx A3 = gamma(p.c) * gamma(-ab) / (gamma(p.b) * gamma(p.c - p.a));
        const GhfParams q3{p.a, p.c - p.b, 1.0 + ab};
        out.coef_a = A3 * eval_dispatch(q3, w, 0, 0, depth + 1);
    }
    if (near_nonpos_int(p.a) || near_nonpos_int(p.c - p.b)) {
        out.coef_b = {0.0, 0.0};
    } else {
        const cplx A4 = gamma(p.c) * gamma(ab) / (gamma(p.a) * gamma(p.c - p.b));
        const GhfParams q4{p.b, p.c - p.a, 1.0 - ab};
        out.coef_b = A4 * eval_dispatch(q4, w, 0, 0, depth + 1);
    }
    return out;
}

// Region dispatch.  w1/winf are net windings about z=1 / infinity; at most
// one of them may be nonzero here (mixed words are resolved by the
// continuation module letter by letter).  depth caps the transform recursion
// so the 1-z <-> z flip cannot cycle.
cplx eval_dispatch(const GhfParams& p, cplx z, int w1, int winf, int depth) {
    validate_c(p);
    constexpr int kMaxDepth = 3;

    const int degree = series_termination(p);
    if (degree >= 0) {
        // Polynomial in z: single-valued, any branch context collapses.
        return series_terminating(p, z, degree);
    }
    // Binomial reductions: F(a,b,b,z) = (1-z)^{-a} (and symmetrically),
    // valid on every branch via the winding of log(1-z).
    if (std::abs(p.b - p.c) <= kTauInt) {
        return detail::pow_one_minus(z, -p.a, w1 - winf);
    }
    if (std::abs(p.a - p.c) <= kTauInt) {
        return detail::pow_one_minus(z, -p.b, w1 - winf);
    }
    if (z == cplx(1.0, 0.0)) {
        throw PreconditionViolation("hypergeometric evaluation at the singular point z = 1");
    }

    if (winf != 0) {
        // Branches reached by loops about infinity: diagonal action on the
        // 1/(1-z) local basis, realized as a winding of log(1-z) by -winf.
        const F2Pieces f2 = eval_f2_pieces(p, z, depth);
        return f2.coef_a * detail::pow_one_minus(z, -p.a, -winf) +
               f2.coef_b * detail::pow_one_minus(z, -p.b, -winf);
    }
    if (w1 != 0) {
        // Branches reached by loops about z = 1: the analytic-at-1 component
        // is fixed, the (1-z)^{c-a-b} component winds.
        const F1Pieces f1 = eval_f1_pieces(p, z, depth);
        return f1.analytic + f1.power_factor * detail::pow_one_minus(z, f1.exponent, w1);
    }

    // Inner calls take the series a bit further out (0.7 instead of 0.5);
    // that keeps nested connection formulas from ping-ponging between the
    // z and 1-z charts everywhere except the tiny lens at |z| = |1-z| = 1.
    const double reach = (depth == 0) ? 0.5 : 0.7;
    if (std::abs(z) <= reach) {
        return series_infinite(p, z, 1e-15);
    }
    if (std::abs(z / (z - 1.0)) <= reach) {
        return eval_pfaff(p, z, depth);
    }
    if (depth >= kMaxDepth) {
        // Deep in the transform recursion: fall back to the raw series
        // (|z| <= 1 whenever this point is reached from a connection
        // formula; convergence may be slow near |z| = 1).
        return series_infinite(p, z, 1e-15);
    }
    if (std::abs(1.0 - z) <= 1.0) {
        const F1Pieces f1 = eval_f1_pieces(p, z, depth);
        return f1.analytic + f1.power_factor * detail::pow_one_minus(z, f1.exponent);
    }
    const F2Pieces f2 = eval_f2_pieces(p, z, depth);
    return f2.coef_a * detail::pow_one_minus(z, -p.a) +
           f2.coef_b * detail::pow_one_minus(z, -p.b);
}

} // namespace

namespace detail {

F1Pieces f1_pieces(const GhfParams& p, cplx z) {
    validate_c(p);
    return eval_f1_pieces(p, z, 0);
}

F2Pieces f2_pieces(const GhfParams& p, cplx z) {
    validate_c(p);
    return eval_f2_pieces(p, z, 0);
}

} // namespace detail

cplx ghf_series(const GhfParams& p, cplx z, double tol) {
    validate_c(p);
    const int degree = series_termination(p);
    if (degree >= 0) return series_terminating(p, z, degree);
    if (z == cplx(0.0, 0.0)) return {1.0, 0.0};
    return series_infinite(p, z, tol);
}

cplx ghf_eval(const GhfParams& p, cplx z, const BranchContext& branch) {
    if (branch.mixes_loop_types() && series_termination(p) < 0) {
        throw PreconditionViolation(
            "branch words mixing loops about z=1 and infinity must be applied "
            "through the continuation module");
    }
    return eval_dispatch(p, z, branch.winding_around_1(), branch.winding_around_inf(), 0);
}

cplx ghf_deriv(const GhfParams& p, cplx z, const BranchContext& branch) {
    const GhfParams up{p.a + 1.0, p.b + 1.0, p.c + 1.0};
    return p.a * p.b / p.c * ghf_eval(up, z, branch);
}

namespace {

const double kQuietNan = std::numeric_limits<double>::quiet_NaN();

cplx checked_constant(cplx value, bool finite, const char* name) {
    if (!finite) {
        throw DegenerateParams(std::string("connection constant ") + name +
                               " is singular (gamma pole in its numerator)");
    }
    return value;
}

} // namespace

cplx ConnectionConstants::a1() const { return checked_constant(A1, A1_finite, "A1"); }
cplx ConnectionConstants::a2() const { return checked_constant(A2, A2_finite, "A2"); }
cplx ConnectionConstants::a3() const { return checked_constant(A3, A3_finite, "A3"); }
cplx ConnectionConstants::a4() const { return checked_constant(A4, A4_finite, "A4"); }

ConnectionConstants connection_constants(const GhfParams& p) {
    validate_c(p);
    const cplx cab = p.c - p.a - p.b;
    const cplx ab = p.a - p.b;

    auto constant = [](cplx num_arg, cplx den1, cplx den2, cplx gc, bool& finite) -> cplx {
        if (near_nonpos_int(num_arg)) {
            finite = false;
            return {kQuietNan, kQuietNan};
        }
        finite = true;
        if (near_nonpos_int(den1) || near_nonpos_int(den2)) return {0.0, 0.0};
        return gc * gamma(num_arg) / (gamma(den1) * gamma(den2));
    };

    const cplx gc = gamma(p.c);
    ConnectionConstants k;
    k.A1 = constant(cab, p.c - p.a, p.c - p.b, gc, k.A1_finite);
    k.A2 = constant(-cab, p.a, p.b, gc, k.A2_finite);
    k.A3 = constant(-ab, p.b, p.c - p.a, gc, k.A3_finite);
    k.A4 = constant(ab, p.a, p.c - p.b, gc, k.A4_finite);
    return k;
}

double dalembert_identity_check(cplx a, cplx z) {
    const GhfParams p{a, a + 0.5, cplx(0.5, 0.0)};
    const cplx lhs = ghf_eval(p, z * z);
    const cplx rhs = 0.5 * (std::exp(-2.0 * a * std::log(1.0 + z)) +
                            std::exp(-2.0 * a * std::log(1.0 - z)));
    return std::abs(lhs - rhs);
}

FundamentalPair fundamental_pair(const GhfParams& p, cplx z) {
    if (near_integer(p.c)) {
        throw DegenerateParams("fundamental pair requires non-integer c; c = " + fmt_cplx(p.c));
    }
    FundamentalPair fp;
    fp.w1_value = ghf_eval(p, z);
    const GhfParams q{p.a - p.c + 1.0, p.b - p.c + 1.0, 2.0 - p.c};
    fp.w2_value = std::exp((1.0 - p.c) * std::log(z)) * ghf_eval(q, z);
    return fp;
}

} // namespace hypercauchy::specfun
