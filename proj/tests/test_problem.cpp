#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypercauchy/problem.hpp"
#include "support/testutil.hpp"

using namespace hypercauchy;
using namespace hypercauchy::problem;
using testutil::Rng;

namespace {

double rel_diff(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

double root_residual(cplx alpha, cplx A, cplx B) {
    return std::abs(alpha * (alpha - A + 1.0) + B);
}

} // namespace

TEST_CASE("spec invariants are constructor-enforced") {
    CHECK_THROWS_AS(ProblemSpec(1, 0, 4, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}), InputError);
    CHECK_THROWS_AS(ProblemSpec(-1, 0, 0, {0.1, 0.0}, {0.0, 0.0}, {0.0, 0.0}), InputError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ProblemSpec(2, 0, 2, {inf, 0.0}, {0.0, 0.0}, {0.0, 0.0}), InputError);
}

TEST_CASE("derived parameters for the cube-root fixture") {
    const auto dp = derive_params(testutil::fixture_cube_root(), 1);
    CHECK(dp.q == 3);
    CHECK(rel_diff(dp.a, {-1.0 / 3.0, 0.0}) < 1e-14);
    CHECK(rel_diff(dp.b, {1.0 / 3.0, 0.0}) < 1e-14);
    CHECK(rel_diff(dp.c, {1.0 / 3.0, 0.0}) < 1e-14);
    CHECK(std::abs(dp.alpha()) == 0.0);  // default root is the plus root
}

TEST_CASE("derived parameters reduce to the classical form when A=B=n=0, m=p") {
    for (int l = 0; l <= 5; ++l) {
        const double g = 0.37;
        const auto dp = derive_params(testutil::fixture_epd(g), l);
        CHECK(dp.q == 2);
        CHECK(rel_diff(dp.a, {-l / 2.0, 0.0}) < 1e-14);
        CHECK(rel_diff(dp.b, {(1.0 - l) / 2.0, 0.0}) < 1e-14);
        CHECK(rel_diff(dp.c, {(g + 1.0) / 2.0, 0.0}) < 1e-14);
    }
}

TEST_CASE("alpha roots for A=3, B=-9/4 are 1 +/- sqrt(13)/2") {
    const auto dp = derive_params(testutil::fixture_both_singular(), 2);
    CHECK(rel_diff(dp.alpha_plus, {2.8027756377319946, 0.0}) < 1e-12);
    CHECK(rel_diff(dp.alpha_minus, {-0.8027756377319946, 0.0}) < 1e-12);
    CHECK(root_residual(dp.alpha_plus, {3.0, 0.0}, {-2.25, 0.0}) < 1e-12);
    CHECK(root_residual(dp.alpha_minus, {3.0, 0.0}, {-2.25, 0.0}) < 1e-12);
}

TEST_CASE("alpha roots satisfy the quadratic for 1000 random coefficient pairs") {
    Rng rng(0xA1B2C3ULL);
    for (int i = 0; i < 1000; ++i) {
        const cplx A = rng.disk(10.0);
        const cplx B = rng.disk(10.0);
        const ProblemSpec spec(2, 0, 2, {0.3, 0.0}, A, B);
        const auto dp = derive_params(spec, 1);
        const double tol = 1e-10 * (1.0 + std::abs(B));
        CHECK(root_residual(dp.alpha_plus, A, B) <= tol);
        CHECK(root_residual(dp.alpha_minus, A, B) <= tol);
    }
}

TEST_CASE("root swap exchanges a and b; their sum is root-independent") {
    Rng rng(0xD00DULL);
    for (int i = 0; i < 200; ++i) {
        const cplx A = rng.disk(5.0);
        const cplx B = rng.disk(5.0);
        const int l = rng.uniform_int(0, 5);
        const ProblemSpec spec(4, 1, 2, {0.21, 0.4}, A, B);
        const auto plus = derive_params(spec, l, RootChoice::plus);
        const auto minus = derive_params(spec, l, RootChoice::minus);
        const double scale = 1.0 + std::abs(plus.a) + std::abs(plus.b);
        CHECK(std::abs(plus.a - minus.b) < 1e-11 * scale);
        CHECK(std::abs(plus.b - minus.a) < 1e-11 * scale);
        const cplx expected_sum = (1.0 - A - 2.0 * static_cast<double>(l)) /
                                  static_cast<double>(spec.q());
        CHECK(std::abs(plus.a + plus.b - expected_sum) < 1e-11 * scale);
        // c depends on neither l nor the root choice.
        CHECK(plus.c == minus.c);
        CHECK(plus.c == derive_params(spec, 0).c);
    }
}

TEST_CASE("characteristic map coefficients") {
    const auto entire = char_map(testutil::fixture_entire());
    CHECK(entire.coefficient == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entire.t_exponent == 3);
    CHECK(entire.x_exponent == 3);

    const auto cube = char_map(testutil::fixture_cube_root());
    CHECK(cube.coefficient == doctest::Approx(2.25).epsilon(1e-15));
    CHECK(cube.t_exponent == 2);
    CHECK(cube.x_exponent == 3);

    const auto wave = char_map(testutil::fixture_wave());
    CHECK(wave.coefficient == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wave.t_exponent == 2);
    CHECK(wave.x_exponent == 2);
}

TEST_CASE("characteristic map evaluation") {
    const auto cube = char_map(testutil::fixture_cube_root());
    CHECK(eval_z(cube, {0.0, 0.0}, {0.7, -0.3}) == cplx(0.0, 0.0));
    CHECK(rel_diff(eval_z(cube, {2.0 / 3.0, 0.0}, {1.0, 0.0}), {1.0, 0.0}) < 1e-14);

    const auto entire = char_map(testutil::fixture_entire());
    CHECK(rel_diff(eval_z(entire, {1.0, 0.0}, {2.0, 0.0}), {0.125, 0.0}) < 1e-14);

    CHECK_THROWS_AS(eval_z(entire, {1.0, 0.0}, {0.0, 0.0}), DivisionByZero);
}

TEST_CASE("degeneracy flags") {
    const auto null_spec = testutil::fixture_null_family();
    const auto dp0 = derive_params(null_spec, 1);
    CHECK(degeneracy_flags(null_spec, dp0).gamma_negative_integer);

    const auto cube_spec = testutil::fixture_cube_root();
    const auto dp1 = derive_params(cube_spec, 1);
    const auto f1 = degeneracy_flags(cube_spec, dp1);
    CHECK(!f1.gamma_negative_integer);
    CHECK(!f1.c_integer);
    CHECK(!f1.cab_integer);  // c-a-b = 1/3
    CHECK(!f1.ab_integer);   // a-b = -2/3

    // Wave operator with l = 2: (a,b,c) = (-1, -1/2, 1/2), c-a-b = 2.
    const auto wave = testutil::fixture_wave();
    const auto dp2 = derive_params(wave, 2);
    const auto f2 = degeneracy_flags(wave, dp2);
    CHECK(f2.cab_integer);
    CHECK(!f2.ab_integer);  // a-b = -1/2
    CHECK(!f2.c_integer);
}

TEST_CASE("distance gauge to the characteristic cone") {
    const auto cube = testutil::fixture_cube_root();
    CHECK(char_distance(cube, {2.0 / 3.0, 0.0}, {1.0, 0.0}) < 1e-15);
    CHECK(char_distance(cube, {0.0, 0.0}, {1.3, 0.0}) ==
          doctest::Approx(std::pow(1.3, 3)).epsilon(1e-14));
    const auto entire = testutil::fixture_entire();
    CHECK(char_distance(entire, {1.0, 0.0}, {2.0, 0.0}) == doctest::Approx(7.0).epsilon(1e-14));
}
