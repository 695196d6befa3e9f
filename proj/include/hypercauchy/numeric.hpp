#pragma once

#include <cmath>
#include <complex>

namespace hypercauchy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Proximity threshold for the excluded integer lattices.  Parameters closer
/// than this to an excluded integer are treated as degenerate rather than
/// attempting logarithmic connection formulas.
inline constexpr double kTauInt = 1e-9;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Nearest integer to Re(z), as a double.
inline double nearest_int(cplx z) {
    return std::round(z.real());
}

inline bool near_integer(cplx z, double tol = kTauInt) {
    return std::abs(z.imag()) <= tol &&
           std::abs(z.real() - std::round(z.real())) <= tol;
}

/// z within tol of {0, -1, -2, ...}.
inline bool near_nonpos_int(cplx z, double tol = kTauInt) {
    return near_integer(z, tol) && std::round(z.real()) <= 0.0;
}

/// z within tol of {0, 1, 2, ...}.
inline bool near_nonneg_int(cplx z, double tol = kTauInt) {
    return near_integer(z, tol) && std::round(z.real()) >= 0.0;
}

/// z within tol of {-1, -2, ...} (zero excluded).
inline bool near_neg_int(cplx z, double tol = kTauInt) {
    return near_integer(z, tol) && std::round(z.real()) <= -1.0;
}

/// Integer power by repeated multiplication; exact for the small exponents
/// used throughout (avoids branch-cut questions entirely).
inline cplx ipow(cplx base, int e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    cplx r{1.0, 0.0};
    cplx b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace hypercauchy
