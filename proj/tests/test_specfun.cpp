#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "utscat/contourquad.hpp"
#include "utscat/errors.hpp"
#include "utscat/specfun.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace utscat;

namespace {

cplx flat_brute(cplx Lambda, int m) {
    return adaptive_gauss(
        [&](double t) { return std::exp(cplx(0, -1) * Lambda * t) * legendre_eval(m, t); }, -1.0,
        1.0, 1e-14);
}

} // namespace

TEST_CASE("legendre recurrence values") {
    CHECK(legendre_eval(0, 0.37) == doctest::Approx(1.0));
    CHECK(legendre_eval(1, 0.37) == doctest::Approx(0.37));
    CHECK(legendre_eval(2, 0.5) == doctest::Approx(-0.125));
    CHECK(legendre_eval(3, -1.0) == doctest::Approx(-1.0));
    const auto all = legendre_all(10, 0.62);
    for (int m = 0; m <= 10; ++m)
        CHECK(all[m] == doctest::Approx(legendre_eval(m, 0.62)).epsilon(1e-14));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto [xs, ws] = gauss_legendre(8);
    double q = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) q += ws[i] * std::pow(xs[i], 14);
    CHECK(q == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
    double one = 0.0;
    for (double w : ws) one += w;
    CHECK(one == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("legendre moments") {
    CHECK(legendre_moment(0, 0) == doctest::Approx(2.0));
    CHECK(legendre_moment(2, 2) == doctest::Approx(4.0 / 15.0));
    CHECK(legendre_moment(1, 2) == doctest::Approx(0.0)); // k < m
    CHECK(legendre_moment(3, 2) == doctest::Approx(0.0)); // k - m odd
}

TEST_CASE("closed-form transform coefficients, degree 2") {
    const auto c = fourier_legendre_coeffs(2);
    REQUIRE(c.A.size() == 3);
    CHECK(std::abs(c.A[0] - cplx(0, -1)) < 1e-14);
    CHECK(std::abs(c.A[1] - cplx(3, 0)) < 1e-14);
    CHECK(std::abs(c.A[2] - cplx(0, 3)) < 1e-14);
    CHECK(std::abs(c.B[0] - cplx(0, 1)) < 1e-14);
    CHECK_THROWS_AS((void)fourier_legendre_coeffs(25), OrderTooLargeError);
}

TEST_CASE("flat integral against brute quadrature") {
    for (int m : {0, 1, 5, 9})
        for (cplx L : {cplx(0.8, 0.0), cplx(7.0, 0.0), cplx(2.0, -1.5), cplx(30.0, 0.0)}) {
            const cplx ref = flat_brute(L, m);
            const double scale = std::max(std::abs(ref), 1e-4);
            CHECK(std::abs(legendre_flat_integral(L, m) - ref) / scale < 1e-11);
        }
}

TEST_CASE("flat integral branch continuity at the switch radius") {
    for (int m : {3, 8, 12}) {
        const cplx L = std::polar(flat_integral_switch_radius(m), 0.4);
        const cplx s = legendre_flat_integral_series(L, m);
        const cplx c = legendre_flat_integral_closed(L, m);
        CHECK(std::abs(s - c) / std::abs(s) < 1e-9);
    }
}

TEST_CASE("flat integral at Lambda = 0 is the P_m orthogonality value") {
    CHECK(std::abs(legendre_flat_integral(cplx{}, 0) - cplx(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(legendre_flat_integral(cplx{}, 4)) < 1e-14);
}

TEST_CASE("half-wave split recombines to the full transform") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(0.3, 40.0), ang(-1.5, 1.5);
    for (int m : {0, 1, 2, 6, 12, 16})
        for (int trial = 0; trial < 8; ++trial) {
            const cplx L = std::polar(mag(rng), ang(rng));
            const cplx plus = std::exp(cplx(0, 1) * L) * legendre_flat_half(L, m, +1);
            const cplx minus = std::exp(cplx(0, -1) * L) * legendre_flat_half(L, m, -1);
            const cplx ref = legendre_flat_integral(L, m);
            // The two pieces cancel below |Lambda| ~ m (and whenever one
            // exponential dominates), so compare on the larger piece's scale.
            // The full-transform reference itself degrades to ~1e-8 by m = 16
            // near its branch switch, hence the looser bound at high degree.
            const double scale = std::max({std::abs(plus), std::abs(minus), 1e-4});
            const double tol = m <= 8 ? 1e-11 : 1e-7;
            CHECK(std::abs(plus + minus - ref) / scale < tol);
        }
}

TEST_CASE("half-wave split matches the explicit pole sum where stable") {
    const cplx L{9.0, -2.0};
    for (int m : {2, 5}) {
        const auto c = fourier_legendre_coeffs(m);
        cplx sp{}, sm{};
        cplx pw = 1.0 / L;
        for (int p = 0; p <= m; ++p, pw /= L) {
            sp += c.A[p] * pw;
            sm += c.B[p] * pw;
        }
        CHECK(std::abs(legendre_flat_half(L, m, +1) - sp) < 1e-13);
        CHECK(std::abs(legendre_flat_half(L, m, -1) - sm) < 1e-13);
    }
}

TEST_CASE("modified bessel anchors and recurrence") {
    CHECK(bessel_k(0, 2.0) == doctest::Approx(0.11389387274953343).epsilon(1e-13));
    CHECK(bessel_k(1, 2.0) == doctest::Approx(0.13986588181652243).epsilon(1e-13));
    const double k2 = bessel_k(0, 2.0) + bessel_k(1, 2.0); // K2 = K0 + (2/x) K1 at x = 2
    CHECK(bessel_k(2, 2.0) == doctest::Approx(k2).epsilon(1e-12));
    CHECK_THROWS_AS((void)bessel_k(0, -1.0), NonPositiveArgumentError);
}
