#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace utscat {

using cplx = std::complex<double>;

/// P_m(t) by the three-term recurrence.
double legendre_eval(int m, double t);

/// P_0(t) .. P_M(t) in one sweep.
std::vector<double> legendre_all(int M, double t);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Coefficients of the closed-form Fourier transform of P_m:
///   \int_{-1}^{1} e^{-i Lambda x} P_m(x) dx
///     = sum_{p=0}^{m} (A[p] e^{i Lambda} + B[p] e^{-i Lambda}) / Lambda^{p+1}.
struct FourierLegendreCoeffs {
    int m = 0;
    std::vector<cplx> A;
    std::vector<cplx> B;
};

/// Throws OrderTooLargeError for m > 24 (factorial headroom limit).
FourierLegendreCoeffs fourier_legendre_coeffs(int m);

/// \int_{-1}^{1} x^k P_m(x) dx (zero when k < m or k-m odd).
double legendre_moment(int k, int m);

/// Modulus below which legendre_flat_integral switches from the closed form
/// to the Taylor-moment series. Degree dependent: the closed form cancels
/// catastrophically once |Lambda| drops much below m.
double flat_integral_switch_radius(int m);

/// \int_{-1}^{1} e^{-i Lambda x} P_m(x) dx for any complex Lambda,
/// including Lambda = 0 (removable).
cplx legendre_flat_integral(cplx Lambda, int m);

/// Same value, forcing the closed-form branch (valid only away from the
/// cancellation region; exposed for branch-consistency testing).
cplx legendre_flat_integral_closed(cplx Lambda, int m);

/// Same value, forcing the Taylor-moment series branch.
cplx legendre_flat_integral_series(cplx Lambda, int m);

/// The outgoing (sigma = +1) / incoming (sigma = -1) half of the flat
/// integral's pole part: R^sigma_m(Lambda) = sum_{p=0}^m C^sigma_{mp} /
/// Lambda^{p+1} with C^+ = A_mp, C^- = B_mp, so that
///   e^{i Lambda} R^+ + e^{-i Lambda} R^- = \int_{-1}^1 e^{-i Lambda x} P_m dx.
/// Evaluated by a stable upward recurrence (no cancellation at small
/// |Lambda|, unlike the explicit p-sum).
cplx legendre_flat_half(cplx Lambda, int m, int sigma);

/// Modified Bessel function K_nu(x), x > 0, integer nu >= 0.
/// K_0 and K_1 from the cosh-kernel integral representation (trapezoid,
/// machine accurate on [0.1, 200]); higher orders by upward recurrence.
double bessel_k(int nu, double x);

} // namespace utscat
