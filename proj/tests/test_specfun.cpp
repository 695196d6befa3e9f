#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hypercauchy/specfun.hpp"
#include "hypercauchy/verify.hpp"
#include "support/testutil.hpp"

using namespace hypercauchy;
using specfun::GhfParams;
using testutil::Rng;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Independent oracle: raw partial sum of the defining series, fixed term
// count, no stopping logic shared with the library.
cplx raw_series(cplx a, cplx b, cplx c, cplx z, int terms) {
    cplx sum{0.0, 0.0};
    cplx term{1.0, 0.0};
    for (int i = 0; i < terms; ++i) {
        sum += term;
        const double di = i;
        term *= (a + di) * (b + di) / ((c + di) * (di + 1.0)) * z;
    }
    return sum;
}

double rel_diff(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

} // namespace

TEST_CASE("gamma classical values") {
    CHECK(rel_diff(specfun::gamma({1.0, 0.0}), {1.0, 0.0}) < 1e-13);
    CHECK(rel_diff(specfun::gamma({0.5, 0.0}), {kSqrtPi, 0.0}) < 1e-13);
    CHECK(rel_diff(specfun::gamma({5.0, 0.0}), {24.0, 0.0}) < 1e-13);
    CHECK(rel_diff(specfun::gamma({10.0, 0.0}), {362880.0, 0.0}) < 1e-13);
    CHECK(rel_diff(specfun::gamma({-1.5, 0.0}), {4.0 * kSqrtPi / 3.0, 0.0}) < 1e-12);
}

TEST_CASE("gamma reflection property on random draws") {
    Rng rng(0xB10C5EEDULL);
    for (int i = 0; i < 200; ++i) {
        cplx z = rng.disk(10.0);
        if (std::hypot(z.real() - std::round(z.real()), z.imag()) < 0.1) continue;
        const cplx lhs = specfun::gamma(z) * specfun::gamma(1.0 - z);
        const cplx rhs = kPi / std::sin(kPi * z);
        CHECK(rel_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("gamma poles raise") {
    CHECK_THROWS_AS(specfun::gamma({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(specfun::gamma({-3.0, 0.0}), PoleError);
    CHECK_THROWS_AS(specfun::gamma({-7.0, 1e-12}), PoleError);
}

TEST_CASE("pochhammer basics") {
    CHECK(specfun::pochhammer({2.7, -0.3}, 0) == cplx(1.0, 0.0));
    CHECK(rel_diff(specfun::pochhammer({1.0, 0.0}, 4), {24.0, 0.0}) < 1e-15);
    CHECK(std::abs(specfun::pochhammer({-3.0, 0.0}, 5)) == 0.0);
    // (lambda)_i = gamma(lambda + i) / gamma(lambda)
    const cplx lam{1.3, 0.4};
    const cplx via_gamma = specfun::gamma(lam + 6.0) / specfun::gamma(lam);
    CHECK(rel_diff(specfun::pochhammer(lam, 6), via_gamma) < 1e-12);
}

TEST_CASE("series: z = 0 gives 1") {
    const GhfParams p{{0.37, 0.11}, {-2.4, 0.9}, {1.25, -0.3}};
    CHECK(specfun::ghf_series(p, {0.0, 0.0}) == cplx(1.0, 0.0));
}

TEST_CASE("series: terminating two-term case is exact for any z") {
    const GhfParams p{{-1.0, 0.0}, {-0.5, 0.0}, {7.0 / 9.0, 0.0}};
    for (const cplx z : {cplx(0.3, 0.0), cplx(-2.0, 1.5), cplx(40.0, -3.0)}) {
        const cplx expected = 1.0 + 9.0 / 14.0 * z;
        CHECK(rel_diff(specfun::ghf_series(p, z), expected) < 1e-15);
    }
}

TEST_CASE("series: b = c binomial identity") {
    // F(a,b,b,z) = (1-z)^{-a}; at a = -1/3, z = 1/2 the value is 2^{-1/3}.
    const GhfParams p{{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}};
    const cplx got = specfun::ghf_series(p, {0.5, 0.0}, 1e-15);
    CHECK(rel_diff(got, {0.79370052598409974, 0.0}) < 1e-13);
    CHECK(rel_diff(got, raw_series(p.a, p.b, p.c, {0.5, 0.0}, 200)) < 1e-13);
}

TEST_CASE("series: no convergence outside the unit disk") {
    const GhfParams p{{0.3, 0.0}, {0.7, 0.0}, {1.1, 0.0}};
    CHECK_THROWS_AS(specfun::ghf_series(p, {1.2, 0.4}), NoConvergence);
}

TEST_CASE("series: c at a non-positive integer is rejected") {
    const GhfParams p{{0.3, 0.0}, {0.7, 0.0}, {-2.0, 0.0}};
    CHECK_THROWS_AS(specfun::ghf_series(p, {0.1, 0.0}), DegenerateParams);
}

TEST_CASE("eval: value 1 at the origin and rejection at z = 1") {
    const GhfParams p{{0.21, 0.4}, {1.3, -0.2}, {0.77, 0.1}};
    CHECK(specfun::ghf_eval(p, {0.0, 0.0}) == cplx(1.0, 0.0));
    CHECK_THROWS_AS(specfun::ghf_eval(p, {1.0, 0.0}), PreconditionViolation);
}

TEST_CASE("eval agrees with the Pfaff route inside the small disk") {
    Rng rng(0x7AFFULL);
    const GhfParams p{{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}};
    for (int i = 0; i < 50; ++i) {
        const cplx z = rng.disk(0.4);
        const cplx direct = specfun::ghf_eval(p, z);
        const GhfParams q{p.c - p.a, p.b, p.c};
        const cplx pfaff = specfun::detail::pow_one_minus(z, -p.b) *
                           specfun::ghf_series(q, z / (z - 1.0), 1e-15);
        CHECK(rel_diff(direct, pfaff) < 1e-10);
    }
}

TEST_CASE("eval agrees with the slow direct series between 0.55 and 0.95") {
    const GhfParams p{{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}};
    for (double z = 0.55; z < 0.95; z += 0.05) {
        const cplx via_connection = specfun::ghf_eval(p, {z, 0.0});
        const cplx slow = raw_series(p.a, p.b, p.c, {z, 0.0}, 5000);
        CHECK(rel_diff(via_connection, slow) < 1e-8);
    }
}

TEST_CASE("eval at z = -3 agrees with the Pfaff-transformed series") {
    const GhfParams p{{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}};
    const cplx z{-3.0, 0.0};
    const GhfParams q{p.c - p.a, p.b, p.c};
    const cplx pfaff = specfun::detail::pow_one_minus(z, -p.b) *
                       specfun::ghf_series(q, z / (z - 1.0), 1e-14);
    CHECK(rel_diff(specfun::ghf_eval(p, z), pfaff) < 1e-8);
}

TEST_CASE("eval symmetry in a and b") {
    Rng rng(0x5EEDULL);
    int checked = 0;
    while (checked < 100) {
        const cplx a = rng.disk(2.5);
        const cplx b = rng.disk(2.5);
        const cplx c = rng.disk(2.5);
        if (testutil::dist_to_integers(c) < 0.1) continue;
        if (testutil::dist_to_integers(c - a - b) < 0.05) continue;
        if (testutil::dist_to_integers(a - b) < 0.05) continue;
        cplx z = rng.disk(2.0);
        if (std::abs(z - 1.0) < 0.1) continue;
        if (std::abs(z.imag()) < 0.05 && z.real() > 0.9) continue;  // stay off the cut
        const cplx lhs = specfun::ghf_eval({a, b, c}, z);
        const cplx rhs = specfun::ghf_eval({b, a, c}, z);
        CHECK(rel_diff(lhs, rhs) < 1e-12);
        ++checked;
    }
}

TEST_CASE("values on the cut follow the upper half-plane limit") {
    const GhfParams p{{0.3, 0.0}, {0.7, 0.0}, {1.1, 0.0}};
    const cplx on_cut = specfun::ghf_eval(p, {2.5, 0.0});
    const cplx above = specfun::ghf_eval(p, {2.5, 1e-9});
    CHECK(std::abs(on_cut - above) < 1e-6 * std::abs(on_cut));
    CHECK(on_cut.imag() != 0.0);
    // The lower side is the conjugate branch, clearly separated.
    const cplx below = specfun::ghf_eval(p, {2.5, -1e-9});
    CHECK(std::abs(on_cut - below) > 1e-3 * std::abs(on_cut));
}

TEST_CASE("connection constants: hand-evaluated gamma products") {
    // a=-1, b=-1/2, c=1/2: A3 = G(1/2)G(1/2) / (G(-1/2)G(3/2)) = -1.
    const auto k = specfun::connection_constants({{-1.0, 0.0}, {-0.5, 0.0}, {0.5, 0.0}});
    CHECK(rel_diff(k.a3(), {-1.0, 0.0}) < 1e-12);

    // Full cancellation: (a,b,c) = (-1/3, 1/3, 1/3) gives A2 = 1 and A1 = 0
    // (denominator pole at c-b = 0).
    const auto k2 = specfun::connection_constants(
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}});
    CHECK(rel_diff(k2.A2, {1.0, 0.0}) < 1e-12);
    CHECK(std::abs(k2.A1) == 0.0);
}

TEST_CASE("connection constants: swapping a and b swaps A3 and A4") {
    const GhfParams p{{0.4, 0.2}, {-0.9, 0.1}, {1.13, -0.4}};
    const auto k1 = specfun::connection_constants(p);
    const auto k2 = specfun::connection_constants({p.b, p.a, p.c});
    CHECK(rel_diff(k1.A3, k2.A4) < 1e-13);
    CHECK(rel_diff(k1.A4, k2.A3) < 1e-13);
    CHECK(rel_diff(k1.A1, k2.A1) < 1e-13);
}

TEST_CASE("connection constants: integer c-a-b makes A2 singular") {
    const auto k = specfun::connection_constants({{0.25, 0.0}, {0.25, 0.0}, {2.5, 0.0}});
    CHECK(!k.A2_finite);
    CHECK_THROWS_AS(k.a2(), DegenerateParams);
    CHECK(k.A1_finite);  // G(c-a-b) = G(2) is fine
}

TEST_CASE("quadratic-argument identity residuals") {
    // Terminating: both sides equal 1 + z^2.
    CHECK(specfun::dalembert_identity_check({-1.0, 0.0}, {0.3, 0.0}) < 1e-14);
    CHECK(specfun::dalembert_identity_check({0.25, 0.0}, {0.5, 0.0}) < 1e-10);
    // b = 0 makes F identically 1, and the right side is also 1.
    CHECK(specfun::dalembert_identity_check({-0.5, 0.0}, {0.7, 0.0}) < 1e-14);
}

TEST_CASE("derivative matches the contiguous relation under contour differentiation") {
    const GhfParams p{{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
    const cplx z0{0.2, 0.1};
    const auto f = [&](cplx z) { return specfun::ghf_eval(p, z); };
    const cplx numeric = verify::contour_derivative(f, z0, 1, 0.15);
    const cplx closed = specfun::ghf_deriv(p, z0);
    CHECK(rel_diff(numeric, closed) < 1e-8);
}

TEST_CASE("eval matches a multiple-precision reference across all regions") {
    // Frozen values computed with an independent arbitrary-precision
    // evaluator (40 significant digits, rounded to double).  The points
    // cover the series disk, the Pfaff disk, both connection-formula
    // regions, the neighborhood of z = 1 and the far field, on both sides
    // of the real axis.
    struct Ref {
        cplx a, b, c, z, expected;
    };
    static const Ref table[] = {
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {0.25, 0.4}, {1.0341180960849379, 0.10518691529516366}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {-0.8, 0.1}, {0.8789655959012461, 0.00909555706906013}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {0.85, 0.3}, {1.2547463998752586, 0.24342449170308372}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {-4.0, 2.0}, {0.6671148532514427, 0.05229930876335311}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {3.5, 0.8}, {0.6394322572654051, 0.5996489312992446}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {3.5, -0.8}, {0.7590130991138465, -0.5561719905390796}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {0.95, 0.02}, {1.6367966581596491, -0.005411188214080452}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {0.6, -0.7}, {1.0371442631633485, -0.2165515896944251}},
        {{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}, {-12.0, -5.0}, {0.525529248579347, -0.08102324435104175}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {0.25, 0.4}, {0.9696958112050492, -0.0639524302639631}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {-0.8, 0.1}, {1.0974687607019407, -0.010553598986411184}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {0.85, 0.3}, {0.8539088148914762, -0.0841984608565727}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {-4.0, 2.0}, {1.357660523845623, -0.11759964067961315}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {3.5, 0.8}, {0.7867547855335757, -0.5062621696442445}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {3.5, -0.8}, {0.7867547855335757, 0.5062621696442445}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {0.95, 0.02}, {0.7891422166742286, -0.01014895551022261}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {0.6, -0.7}, {0.9350223223061441, 0.12952094701474157}},
        {{-1.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {7.0 / 9.0, 0.0}, {-12.0, -5.0}, {1.7159143987735286, 0.16726351304343107}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {0.25, 0.4}, {1.335893925629128, 0.48036687848262755}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {-0.8, 0.1}, {-0.11371980144400025, 0.15038950324705636}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {0.85, 0.3}, {1.9838506531595026, 0.2933534098298796}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {-4.0, 2.0}, {-5.730272123118591, 4.430020253162616}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {3.5, 0.8}, {3.8587236078050657, -0.6722805886697837}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {3.5, -0.8}, {3.8587236078050657, 0.6722805886697837}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {0.95, 0.02}, {2.0590852261121086, 0.018484605025719043}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {0.6, -0.7}, {1.7976773552630962, -0.7616431310814159}},
        {{-1.6009252125773317, 0.0}, {-0.3990747874226684, 0.0}, {0.5, 0.0}, {-12.0, -5.0}, {-27.414624020037493, -17.457938034339218}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {0.25, 0.4}, {1.0561492847299017, 0.15044547001686384}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {-0.8, 0.1}, {0.8259837093805861, 0.01073095524699719}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {0.85, 0.3}, {1.4331128124464536, 0.2880684743332232}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {-4.0, 2.0}, {0.5184785037955885, 0.04813959553489859}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {3.5, 0.8}, {0.1328674815927513, 0.9375154666560163}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {3.5, -0.8}, {0.7200421471503914, -0.8763296495358284}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {0.95, 0.02}, {1.666772156592848, -0.19273316516065656}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {0.6, -0.7}, {1.0587694067304192, -0.2891446054448393}},
        {{1.25, -0.4}, {0.45, 0.3}, {2.3, 0.7}, {-12.0, -5.0}, {0.3472536650315798, -0.1377517438301824}},
    };
    for (const auto& ref : table) {
        const cplx got = specfun::ghf_eval({ref.a, ref.b, ref.c}, ref.z);
        CHECK(rel_diff(got, ref.expected) < 1e-10);
    }
}

TEST_CASE("branch words mixing loop types are rejected by the plain evaluator") {
    const GhfParams p{{0.3, 0.1}, {0.7, -0.2}, {1.1, 0.05}};
    const BranchContext mixed{LoopLetter::around_1_pos, LoopLetter::around_inf_pos};
    CHECK_THROWS_AS(specfun::ghf_eval(p, {0.3, 0.2}, mixed), PreconditionViolation);
    // Terminating parameters are single-valued; the same word is harmless.
    const GhfParams poly{{-2.0, 0.0}, {0.7, 0.0}, {1.1, 0.0}};
    CHECK(specfun::ghf_eval(poly, {0.3, 0.2}, mixed) ==
          specfun::ghf_eval(poly, {0.3, 0.2}));
}

TEST_CASE("fundamental pair local behavior at the origin") {
    const GhfParams p{{0.4, 0.0}, {0.9, 0.0}, {0.6, 0.0}};
    const cplx z{1e-6, 0.0};
    const auto fp = specfun::fundamental_pair(p, z);
    CHECK(std::abs(fp.w1_value - 1.0) < 1e-5);
    const cplx z_power = std::exp((1.0 - p.c) * std::log(z));
    CHECK(rel_diff(fp.w2_value, z_power) < 1e-5);
}
