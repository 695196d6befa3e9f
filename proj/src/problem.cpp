#include "hypercauchy/problem.hpp"

#include <cmath>
#include <sstream>

namespace hypercauchy::problem {

ProblemSpec::ProblemSpec(int m_, int n_, int p_, cplx gamma_, cplx A_, cplx B_)
    : m(m_), n(n_), p(p_), gamma(gamma_), A(A_), B(B_) {
    if (m < 0 || n < 0 || p < 0) {
        throw InputError("problem spec requires non-negative integers m, n, p");
    }
    if (q() <= 0) {
        std::ostringstream os;
        os << "problem spec requires q = m - p + 2 > 0, got q = " << q();
        throw InputError(os.str());
    }
    if (!is_finite(gamma) || !is_finite(A) || !is_finite(B)) {
        throw InputError("problem spec coefficients must be finite");
    }
}

DerivedParams derive_params(const ProblemSpec& spec, int l, RootChoice root) {
    if (l < 0) throw InputError("data exponent l must be non-negative");

    DerivedParams dp;
    dp.q = spec.q();
    dp.l = l;
    dp.root_choice = root;

    // rho^2 + (1-A) rho + B = 0, solved cancellation-free: take the root with
    // the larger numerator from the +/- sqrt form, recover the other from the
    // product of roots (= B).
    const cplx linear = spec.A - 1.0;  // sum of the roots
    const cplx disc = std::sqrt(linear * linear - 4.0 * spec.B);
    const cplx big = (std::abs(linear + disc) >= std::abs(linear - disc))
                         ? 0.5 * (linear + disc)
                         : 0.5 * (linear - disc);
    cplx other;
    if (big == cplx(0.0, 0.0)) {
        other = {0.0, 0.0};  // both roots vanish (A = 1, B = 0)
    } else {
        other = spec.B / big;
    }
    // Label the roots by the sign of the sqrt term they correspond to.
    if (std::abs(big - 0.5 * (linear + disc)) <= std::abs(big - 0.5 * (linear - disc))) {
        dp.alpha_plus = big;
        dp.alpha_minus = other;
    } else {
        dp.alpha_plus = other;
        dp.alpha_minus = big;
    }

    const double q = static_cast<double>(dp.q);
    const cplx alpha = dp.alpha();
    dp.a = -(alpha + static_cast<double>(l)) / q;
    dp.b = (1.0 + alpha - spec.A - static_cast<double>(l)) / q;
    dp.c = (static_cast<double>(spec.n) + spec.gamma + 1.0) /
           static_cast<double>(spec.n + 2);
    return dp;
}

CharMap char_map(const ProblemSpec& spec) {
    CharMap map;
    const double q = static_cast<double>(spec.q());
    const double nn = static_cast<double>(spec.n + 2);
    map.coefficient = (q / nn) * (q / nn);
    map.t_exponent = spec.n + 2;
    map.x_exponent = spec.q();
    return map;
}

cplx eval_z(const CharMap& map, cplx t, cplx x) {
    if (std::abs(x) < 1e-300) {
        throw DivisionByZero("characteristic map evaluated on the axis x = 0");
    }
    return map.coefficient * ipow(t, map.t_exponent) / ipow(x, map.x_exponent);
}

DegeneracyFlags degeneracy_flags(const ProblemSpec& spec, const DerivedParams& dp) {
    DegeneracyFlags f;
    f.gamma_negative_integer = near_neg_int(spec.gamma);
    f.c_integer = near_integer(dp.c);
    f.cab_integer = near_integer(dp.c - dp.a - dp.b);
    f.ab_integer = near_integer(dp.a - dp.b);
    return f;
}

double char_distance(const ProblemSpec& spec, cplx t, cplx x) {
    const CharMap map = char_map(spec);
    return std::abs(ipow(x, map.x_exponent) - map.coefficient * ipow(t, map.t_exponent));
}

} // namespace hypercauchy::problem
