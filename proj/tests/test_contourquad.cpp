#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "utscat/contourquad.hpp"
#include "utscat/errors.hpp"
#include "utscat/geometry.hpp"
#include "utscat/specfun.hpp"
#include "utscat/verify.hpp"

#include <cmath>
#include <numbers>

using namespace utscat;

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("adaptive gauss on smooth and oscillatory integrands") {
    const cplx p = adaptive_gauss([](double x) { return cplx(x * x * x, 0.0); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(p - cplx(0.25, 0.0)) < 1e-13);
    const cplx o = adaptive_gauss([](double x) { return std::exp(cplx(0, 40.0) * x); }, 0.0, 1.0,
                                  1e-12);
    const cplx o_ref = (std::exp(cplx(0, 40.0)) - 1.0) / cplx(0, 40.0);
    CHECK(std::abs(o - o_ref) < 1e-12);
}

TEST_CASE("ray integral of two-sided decaying exponentials") {
    // The integrand must die off at both ends of the ray, so use
    // e^{-lam - 1/lam}: int_0^inf e^{-lam - 1/lam} dlam = 2 K_1(2) and
    // int_0^inf e^{-lam - 1/lam} dlam / lam = 2 K_0(2).
    QuadParams quad;
    const double k1 = 2.0 * bessel_k(1, 2.0);
    const double k0 = 2.0 * bessel_k(0, 2.0);
    const auto f = [](cplx lam) { return std::exp(-lam - 1.0 / lam); };
    const cplx g1 = ray_integral(f, 0.0, quad);
    CHECK(std::abs(g1 - k1) < 1e-12);
    const cplx g2 = ray_integral([&](cplx lam) { return f(lam) / lam; }, 0.0, quad);
    CHECK(std::abs(g2 - k0) < 1e-12);
    // Rotated ray, same analytic answer by Cauchy.
    const cplx g3 = ray_integral(f, 0.3, quad);
    CHECK(std::abs(g3 - k1) < 1e-11);
}

TEST_CASE("ray integral refuses non-decaying integrands") {
    QuadParams quad;
    CHECK_THROWS_AS((void)ray_integral([](cplx lam) { return std::exp(lam); }, 0.0, quad),
                    NoDecayError);
}

TEST_CASE("kernel ray integral refuses rays through a pole") {
    QuadParams quad;
    // h = -1: kernel zeros at +-1, both of which sit on the theta = 0 ray.
    KernelIntegrand f{cplx(0, 1), cplx(0, 1), 0, cplx(-1, 0), 1.0, false};
    CHECK_THROWS_AS((void)ray_integral(f, 0.0, quad), PoleOnRayError);
}

TEST_CASE("circle residue of elementary poles") {
    const cplx r1 = circle_residue([](cplx lam) { return 1.0 / lam; }, cplx{}, 0.5);
    CHECK(std::abs(r1 - cplx(1.0, 0.0)) < 1e-13);
    const cplx r2 =
        circle_residue([](cplx lam) { return std::exp(lam) / (lam - 2.0); }, cplx(2.0, 0.0), 0.3);
    CHECK(std::abs(r2 - std::exp(cplx(2.0, 0.0))) < 1e-12);
    const cplx r0 = circle_residue([](cplx lam) { return std::exp(lam); }, cplx{}, 0.5);
    CHECK(std::abs(r0) < 1e-14);
}

TEST_CASE("kernel poles satisfy the zero equation") {
    KernelIntegrand f{cplx(0.5, 1.0), cplx(-0.5, 1.0), 2, cplx(0.3, -0.8), 1.3, false};
    for (const cplx pole : f.poles())
        CHECK(std::abs(pole * f.h - std::conj(f.h) / pole) < 1e-13);
}

TEST_CASE("deformed evaluation matches the indented brute-force oracle") {
    const PolygonGeometry geom = example_square();
    QuadParams quad;
    // Phase point of a boundary-limit kernel: z0 on side 2, source side 0.
    const cplx z0 = geom.side_point(2, 0.5);
    const cplx w = z0 - geom.midpoints[0] + geom.halfsides[0];
    KernelIntegrand f{w, -std::conj(w), 1, geom.halfsides[0], 1.0, false};
    ContourPlan plan;
    plan.theta0 = geom.ray_angles[0];
    plan.indent_side = geom.indentation_sign(0);
    plan.quad = quad;
    const cplx oracle = indented_ray_integral(f, plan);
    const cplx deformed =
        deformed_integral_with_crossing(f, plan.theta0, plan.theta0 + kPi / 4, plan.indent_side,
                                        quad);
    CHECK(std::abs(oracle - deformed) < 1e-6);
}

TEST_CASE("quad params loosen with tolerance") {
    const QuadParams tight = QuadParams::from_tolerance(1e-10);
    const QuadParams loose = QuadParams::from_tolerance(1e-3);
    CHECK(tight.step == doctest::Approx(0.05));
    CHECK(loose.step > tight.step);
    CHECK(loose.tolerance == doctest::Approx(1e-3));
}
