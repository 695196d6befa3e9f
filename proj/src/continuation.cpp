#include "hypercauchy/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypercauchy::continuation {

namespace {

constexpr double kPathMargin = 1e-3;
constexpr int kLoopVertices = 24;

double point_segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double s = ((p - a) * std::conj(ab)).real() / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

cplx unit_phase(cplx v) { return std::exp(cplx(0.0, 2.0 * kPi) * v); }

// Taylor expansion of the solution about z0, summed at displacement h along
// with its derivative.  Returns false if 200 coefficients did not reach the
// local tolerance (caller halves the step).
bool taylor_step(const GhfParams& p, cplx z0, const OdeState& in, cplx h, OdeState& out) {
    constexpr int kMaxOrder = 200;
    constexpr double kLocalTol = 1e-15;

    const cplx lead = z0 * (1.0 - z0);
    const cplx one_minus_2z = 1.0 - 2.0 * z0;
    const cplx q0 = p.c - (1.0 + p.a + p.b) * z0;

    cplx yk = in.value;        // coefficient k
    cplx yk1 = in.derivative;  // coefficient k+1

    cplx val = yk + yk1 * h;
    cplx der = yk1;
    cplx hpow = h;  // h^{k+1} while processing coefficient k+1

    int calm = 0;
    for (int k = 0; k + 2 <= kMaxOrder; ++k) {
        const double dk = static_cast<double>(k);
        const cplx yk2 = ((dk + p.a) * (dk + p.b) * yk -
                          (dk + 1.0) * (one_minus_2z * dk + q0) * yk1) /
                         (lead * (dk + 2.0) * (dk + 1.0));
        const cplx term_der = (dk + 2.0) * yk2 * hpow;
        hpow *= h;
        const cplx term_val = yk2 * hpow;
        val += term_val;
        der += term_der;

        const double vt = std::abs(term_val);
        const double dt = std::abs(term_der);
        if (vt <= kLocalTol * std::abs(val) && dt <= kLocalTol * std::max(1e-300, std::abs(der))) {
            if (++calm >= 2) {
                out.value = val;
                out.derivative = der;
                return true;
            }
        } else {
            calm = 0;
        }
        yk = yk1;
        yk1 = yk2;
    }
    return false;
}

OdeState integrate_segment(const GhfParams& p, cplx from, cplx to, OdeState state) {
    const cplx diff = to - from;
    const double len = std::abs(diff);
    if (len == 0.0) return state;
    const cplx dir = diff / len;

    cplx pos = from;
    double travelled = 0.0;
    while (travelled < len) {
        const double r_sing = std::min(std::abs(pos), std::abs(pos - 1.0));
        if (r_sing < 0.5 * kPathMargin) {
            throw StepFailure("continuation path came too close to a singular point");
        }
        double h_mag = std::min(0.4 * r_sing, len - travelled);
        OdeState next;
        while (!taylor_step(p, pos, state, h_mag * dir, next)) {
            h_mag *= 0.5;
            if (h_mag < 1e-12) {
                throw StepFailure("continuation step collapsed without converging");
            }
        }
        state = next;
        pos += h_mag * dir;
        travelled += h_mag;
    }
    return state;
}

void check_admissible(const GhfParams& p, LoopTarget target) {
    if (target == LoopTarget::K2 && near_integer(p.c - p.a - p.b)) {
        throw DegenerateParams("loop about z = 1 requires c-a-b non-integer");
    }
    if (target == LoopTarget::K1 && near_integer(p.a - p.b)) {
        throw DegenerateParams("loop about infinity requires a-b non-integer");
    }
}

// Branch action of one loop letter on a solution state at fixed z0: express
// the state in the local basis diagonalizing that loop, scale, recombine.
OdeState apply_letter(const GhfParams& p, cplx z0, const OdeState& state, LoopLetter letter) {
    const bool about_one =
        (letter == LoopLetter::around_1_pos || letter == LoopLetter::around_1_neg);
    const bool positive =
        (letter == LoopLetter::around_1_pos || letter == LoopLetter::around_inf_pos);

    cplx b1, b2, d1, d2;  // basis values and derivatives
    cplx m1, m2;          // multipliers
    if (about_one) {
        const cplx cab = p.c - p.a - p.b;
        if (near_integer(cab)) {
            throw DegenerateParams("branch action about z = 1 requires c-a-b non-integer");
        }
        const cplx s1 = p.a + p.b - p.c + 1.0;
        const cplx s2 = cab + 1.0;
        const cplx w = 1.0 - z0;
        const GhfParams g1{p.a, p.b, s1};
        const GhfParams g2{p.c - p.a, p.c - p.b, s2};
        const cplx G1 = specfun::ghf_eval(g1, w);
        const cplx G2 = specfun::ghf_eval(g2, w);
        const cplx P = specfun::detail::pow_one_minus(z0, cab);
        const cplx Pm = specfun::detail::pow_one_minus(z0, cab - 1.0);
        b1 = G1;
        b2 = P * G2;
        d1 = -specfun::ghf_deriv(g1, w);
        d2 = -cab * Pm * G2 - P * specfun::ghf_deriv(g2, w);
        m1 = {1.0, 0.0};
        m2 = positive ? unit_phase(cab) : unit_phase(-cab);
    } else {
        const cplx ab = p.a - p.b;
        if (near_integer(ab)) {
            throw DegenerateParams("branch action about infinity requires a-b non-integer");
        }
        const cplx v = 1.0 / (1.0 - z0);
        const GhfParams h1{p.a, p.c - p.b, 1.0 + ab};
        const GhfParams h2{p.b, p.c - p.a, 1.0 - ab};
        const cplx H1 = specfun::ghf_eval(h1, v);
        const cplx H2 = specfun::ghf_eval(h2, v);
        const cplx Qa = specfun::detail::pow_one_minus(z0, -p.a);
        const cplx Qb = specfun::detail::pow_one_minus(z0, -p.b);
        const cplx Qa1 = specfun::detail::pow_one_minus(z0, -p.a - 1.0);
        const cplx Qb1 = specfun::detail::pow_one_minus(z0, -p.b - 1.0);
        b1 = Qa * H1;
        b2 = Qb * H2;
        d1 = p.a * Qa1 * H1 + Qa * specfun::ghf_deriv(h1, v) * v * v;
        d2 = p.b * Qb1 * H2 + Qb * specfun::ghf_deriv(h2, v) * v * v;
        m1 = positive ? unit_phase(p.a) : unit_phase(-p.a);
        m2 = positive ? unit_phase(p.b) : unit_phase(-p.b);
    }

    const cplx det = b1 * d2 - b2 * d1;
    if (std::abs(det) <= 1e-13 * (std::abs(b1 * d2) + std::abs(b2 * d1))) {
        throw VerificationFailure("branch basis decomposition is ill-conditioned");
    }
    const cplx c1 = (state.value * d2 - state.derivative * b2) / det;
    const cplx c2 = (b1 * state.derivative - d1 * state.value) / det;
    OdeState out;
    out.value = c1 * m1 * b1 + c2 * m2 * b2;
    out.derivative = c1 * m1 * d1 + c2 * m2 * d2;
    return out;
}

} // namespace

void LoopPath::validate() const {
    if (vertices.size() < 2) throw InputError("loop path needs at least two vertices");
    if (vertices.front() != vertices.back()) {
        throw InputError("loop path must be closed (first vertex == last vertex)");
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (point_segment_distance({0.0, 0.0}, vertices[i], vertices[i + 1]) < kPathMargin ||
            point_segment_distance({1.0, 0.0}, vertices[i], vertices[i + 1]) < kPathMargin) {
            throw InputError("loop path violates the 1e-3 margin around z = 0 and z = 1");
        }
    }
}

namespace {

// Polygonal circle about `center`, entered (and left) by a radial segment
// from the basepoint when the basepoint is not already on the circle.
LoopPath circle_loop(cplx basepoint, cplx center, double radius, double orientation,
                     LoopTarget target) {
    LoopPath path;
    path.basepoint_z = basepoint;
    path.target = target;

    const double dist = std::abs(basepoint - center);
    const bool needs_approach = std::abs(dist - radius) > 1e-12;
    const cplx attach =
        needs_approach ? center + (basepoint - center) * (radius / std::max(dist, 1e-9))
                       : basepoint;

    if (needs_approach) path.vertices.push_back(basepoint);
    const double phi0 = std::arg(attach - center);
    const cplx start = needs_approach ? attach : basepoint;
    path.vertices.push_back(start);
    for (int j = 1; j < kLoopVertices; ++j) {
        const double phi = phi0 + orientation * 2.0 * kPi * j / kLoopVertices;
        path.vertices.push_back(center + std::polar(radius, phi));
    }
    path.vertices.push_back(start);  // exact closure of the circle
    if (needs_approach) path.vertices.push_back(basepoint);
    path.validate();
    return path;
}

} // namespace

LoopPath loop_around_one(cplx basepoint, bool positive) {
    const double dist = std::abs(basepoint - 1.0);
    const double rho = (dist > 0.8) ? 0.5 : dist;
    return circle_loop(basepoint, {1.0, 0.0}, rho, positive ? 1.0 : -1.0, LoopTarget::K2);
}

LoopPath loop_around_infinity(cplx basepoint, bool positive) {
    // Positive orientation about infinity is clockwise in the plane; the
    // circle always encloses both finite singular points.
    const cplx center{0.5, 0.0};
    const double dist = std::abs(basepoint - center);
    const double radius = std::max(dist, 2.5);
    return circle_loop(basepoint, center, radius, positive ? -1.0 : 1.0, LoopTarget::K1);
}

LoopPath trivial_loop(cplx basepoint) {
    LoopPath path;
    path.basepoint_z = basepoint;
    path.target = LoopTarget::trivial;
    const double r = std::min(
        0.1, 0.4 * std::min(std::abs(basepoint), std::abs(basepoint - 1.0)));
    path.vertices = {basepoint, basepoint + cplx(r, 0.0), basepoint + cplx(0.0, r),
                     basepoint + cplx(-r, 0.0), basepoint + cplx(0.0, -r),
                     basepoint + cplx(r, 0.0), basepoint};
    path.validate();
    return path;
}

OdeState continue_ode(const GhfParams& p, const LoopPath& path, OdeState w0) {
    path.validate();
    OdeState state = w0;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        state = integrate_segment(p, path.vertices[i], path.vertices[i + 1], state);
    }
    return state;
}

OdeState continue_ode(const DerivedParams& dp, const LoopPath& path, OdeState w0) {
    return continue_ode(GhfParams{dp.a, dp.b, dp.c}, path, w0);
}

OdeState transport(const GhfParams& p, cplx from, cplx to, OdeState w0) {
    return integrate_segment(p, from, to, w0);
}

namespace {

// Shared tail of the two monodromy operations: run the ODE oracle around the
// loop and compare with the closed-form after-value of the hypergeometric
// factor.
void cross_validate(const GhfParams& p, const LoopPath& loop, cplx z0, cplx expected_f,
                    MonodromyResult& result, double tol) {
    OdeState w0{specfun::ghf_eval(p, z0), specfun::ghf_deriv(p, z0)};
    const OdeState end = continue_ode(p, loop, w0);
    result.ode_value = end.value;
    result.ode_relative_diff =
        std::abs(end.value - expected_f) / std::max(1e-300, std::abs(expected_f));
    if (result.ode_relative_diff > tol) {
        std::ostringstream os;
        os << "monodromy closed form disagrees with the ODE oracle by "
           << result.ode_relative_diff;
        throw VerificationFailure(os.str());
    }
}

} // namespace

MonodromyResult monodromy_k2(const MonomialSolution& u, cplx t, cplx x) {
    const cplx z0 = problem::eval_z(u.map, t, x);
    if (std::abs(z0.imag()) > 1e-10 || z0.real() <= 1e-6 || z0.real() >= 1.0 - 1e-6) {
        throw BasepointInvalid("monodromy about the cone needs a basepoint with z in (0,1)");
    }
    const GhfParams p{u.dp.a, u.dp.b, u.dp.c};
    check_admissible(p, LoopTarget::K2);

    const cplx xl = ipow(x, u.l);
    const auto pieces = specfun::detail::f1_pieces(p, z0);
    const cplx power = specfun::detail::pow_one_minus(z0, pieces.exponent);
    const cplx U1 = xl * pieces.analytic;
    const cplx U2 = xl * pieces.power_factor * power;
    const cplx mult = unit_phase(pieces.exponent);

    MonodromyResult res;
    res.value_before = U1 + U2;
    res.value_after = U1 + mult * U2;
    res.components = {{"analytic_at_one", U1, {1.0, 0.0}}, {"cone_power_branch", U2, mult}};

    const LoopPath loop = loop_around_one(z0, true);
    cross_validate(p, loop, z0, res.value_after / xl, res, 1e-6);
    return res;
}

MonodromyResult monodromy_k1(const MonomialSolution& u, cplx t, cplx x) {
    const cplx z0 = problem::eval_z(u.map, t, x);
    if (std::abs(1.0 - z0) <= 1.0 + 1e-9) {
        throw BasepointInvalid("monodromy about the axis needs a basepoint with |1-z| > 1");
    }
    const GhfParams p{u.dp.a, u.dp.b, u.dp.c};
    check_admissible(p, LoopTarget::K1);

    const cplx xl = ipow(x, u.l);
    const auto pieces = specfun::detail::f2_pieces(p, z0);
    const cplx U3 = xl * pieces.coef_a * specfun::detail::pow_one_minus(z0, -p.a);
    const cplx U4 = xl * pieces.coef_b * specfun::detail::pow_one_minus(z0, -p.b);
    const cplx ma = unit_phase(p.a);
    const cplx mb = unit_phase(p.b);

    MonodromyResult res;
    res.value_before = U3 + U4;
    res.value_after = ma * U3 + mb * U4;
    res.components = {{"axis_branch_a", U3, ma}, {"axis_branch_b", U4, mb}};

    const LoopPath loop = loop_around_infinity(z0, true);
    cross_validate(p, loop, z0, res.value_after / xl, res, 1e-6);
    return res;
}

cplx continue_value(const MonomialSolution& u, cplx t, cplx x, const BranchContext& branch) {
    const cplx z0 = problem::eval_z(u.map, t, x);
    const GhfParams p{u.dp.a, u.dp.b, u.dp.c};
    if (specfun::detail::termination_degree(p.a) >= 0 ||
        specfun::detail::termination_degree(p.b) >= 0) {
        // Polynomial part: single-valued, every loop acts trivially.
        return solution::eval_monomial(u, t, x);
    }
    OdeState state{specfun::ghf_eval(p, z0), specfun::ghf_deriv(p, z0)};
    for (const LoopLetter letter : branch.loop_word) {
        state = apply_letter(p, z0, state, letter);
    }
    return ipow(x, u.l) * state.value;
}

} // namespace hypercauchy::continuation
