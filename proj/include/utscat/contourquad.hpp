#pragma once

#include <array>
#include <complex>
#include <functional>

namespace utscat {

using cplx = std::complex<double>;

/// Truncation / accuracy knobs for the complex-plane quadratures.
struct QuadParams {
    double step = 0.05;        // trapezoid step in the log-radial variable
    double half_width = 8.0;   // truncation |s| <= half_width
    double tolerance = 1e-10;  // declared accuracy target
    double residue_radius = 0.1;
    int residue_points = 64;

    /// Map a requested tolerance to a trapezoid step (looser tolerance,
    /// coarser grid; used by the UT_QUAD_TOL probe).
    static QuadParams from_tolerance(double tol);
};

/// The one integrand family all side kernels share:
///   prefactor(lam) * exp(i beta (a lam + b / lam))
///     / (lam h - conj(h)/lam)^{p+1} / lam,
/// with prefactor either 1 or (lam h + conj(h)/lam). The trailing 1/lam is
/// the d lam / lam measure; ray_integral & co. integrate against plain d lam.
struct KernelIntegrand {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
    int p = 0;
    cplx h{1.0, 0.0};
    double beta = 1.0;
    bool with_prefactor = false;

    cplx exponent(cplx lam) const {
        return cplx(0, 1) * beta * (a * lam + b / lam);
    }
    cplx operator()(cplx lam) const;

    /// The two kernel zeros lambda^2 h = conj(h): +-exp(-i arg h).
    std::array<cplx, 2> poles() const;
};

/// Evaluation plan for an indented or deformed ray.
struct ContourPlan {
    double theta0 = 0.0;    // base ray direction
    double theta1 = 0.0;    // deformed ray direction, |theta1 - theta0| <= pi/2
    int indent_side = +1;   // detour bulges toward indent_side * i * pole
    double eps = 0.3;       // indentation radius (< pole separation / 4)
    QuadParams quad;
};

/// \int_0^{inf e^{i theta}} f(lam) d lam via lam = e^{i theta} e^s and the
/// trapezoid rule on s in [-S, S]. The caller guarantees decay at both ends;
/// lack of decay at the endpoints raises NoDecayError.
cplx ray_integral(const std::function<cplx(cplx)>& f, double theta, const QuadParams& quad);

/// Same, for the kernel family; additionally refuses rays passing within
/// eps of a kernel pole (PoleOnRayError).
cplx ray_integral(const KernelIntegrand& f, double theta, const QuadParams& quad);

/// Base-ray evaluation with a semicircular detour of radius plan.eps around
/// the on-ray pole. Handles slow algebraic/oscillatory decay by adaptive
/// panel quadrature with a large truncation radius: this is the slow
/// brute-force oracle the deformed evaluations are checked against.
cplx indented_ray_integral(const KernelIntegrand& f, const ContourPlan& plan);

/// (1 / 2 pi i) contour integral of f over the circle |lam - center| = radius,
/// by the N-point trapezoid rule (spectrally accurate).
cplx circle_residue(const std::function<cplx(cplx)>& f, cplx center, double radius,
                    int npoints = 64);

/// Ray integral along theta1 plus 2 pi i times the residue of every pole
/// swept when rotating the indented base ray (theta0, with the stated
/// indentation side) to theta1; sign +1 for a counterclockwise sweep.
/// Requires |theta1 - theta0| <= pi/2 (no angle wrapping).
cplx deformed_integral_with_crossing(const KernelIntegrand& f, double theta0, double theta1,
                                     int indent_side, const QuadParams& quad);

/// Adaptive Gauss quadrature of a complex-valued function on [a, b]
/// (15-point panels, bisection until the panel estimate settles).
cplx adaptive_gauss(const std::function<cplx(double)>& f, double a, double b, double tol,
                    int max_depth = 14);

} // namespace utscat
