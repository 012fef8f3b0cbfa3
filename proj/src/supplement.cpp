#include "utscat/supplement.hpp"

#include "utscat/errors.hpp"
#include "utscat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace utscat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCornerMargin = 0.985;  // |t0| beyond this: decay too slow
constexpr double kMinDecayScale = 0.01; // threshold on beta |w|

// Deformed-ray evaluation of the shared kernel with phase point w.
// The decay sector of exp(i beta (lam w - conj(w)/lam)) is centered on
// theta* = pi/2 - arg w; the contour is rotated to the bisector of the base
// ray and theta* (the half-angle deformation), far enough from the on-ray
// kernel zero yet well inside the sector. When the bisector is still too
// close to the base ray, the contour is rotated a fixed pi/4 instead, on
// the sweep side closest to theta* (or on the indentation side if the two
// directions coincide).
cplx kernel_integral(const PolygonGeometry& geom, cplx w, int j, int p, double beta,
                     bool with_prefactor, const QuadParams& quad, DeformationMode mode) {
    if (beta * std::abs(w) < kMinDecayScale)
        throw CornerDegeneracyError("kernel_integral: decay rate below threshold");

    KernelIntegrand f;
    f.a = w;
    f.b = -std::conj(w);
    f.p = p;
    f.h = geom.halfsides[j];
    f.beta = beta;
    f.with_prefactor = with_prefactor;

    const double theta0 = geom.ray_angles[j];
    double delta = wrap_angle(kPi / 2 - std::arg(w) - theta0);
    // Convexity keeps theta* inside [theta0 - pi/2, theta0 + pi/2]; clamp
    // roundoff spill at the sector edges.
    delta = std::clamp(delta, -kPi / 2, kPi / 2);

    double shift = (mode == DeformationMode::HalfAngle) ? delta / 2 : delta;
    if (std::abs(shift) < kPi / 8) {
        const int b = geom.indentation_sign(j);
        const double s = (delta == 0.0) ? b : (delta > 0 ? 1.0 : -1.0);
        shift = s * kPi / 4;
    }
    return deformed_integral_with_crossing(f, theta0, theta0 + shift, geom.indentation_sign(j),
                                           quad);
}

} // namespace

cplx mode_integral(const PolygonGeometry& geom, cplx z, int j, int m, double beta,
                   bool with_prefactor, const QuadParams& quad) {
    const cplx h = geom.halfsides[j];
    const double theta0 = geom.ray_angles[j];
    const cplx w0 = z - geom.midpoints[j];
    const double bh = beta * std::abs(h);
    const double tol = std::max(0.1 * quad.tolerance, 1e-13);
    const cplx i1{0.0, 1.0};

    const auto lambda_of = [&](cplx lam) { return beta * (lam * h - std::conj(h) / lam); };
    const auto envelope = [&](cplx lam, cplx w, cplx legendre_part) {
        cplx v = std::exp(i1 * beta * (lam * w - std::conj(w) / lam)) * legendre_part;
        if (with_prefactor) v *= lam * h + std::conj(h) / lam;
        return v;
    };

    // Radius R0 past which the two half-wave pieces are individually stable:
    // |Lambda| >= T everywhere on |lam| = R0 and |lam| = 1/R0.
    const double T = std::max(1.2 * flat_integral_switch_radius(m), 2.5 * bh);
    const double x = T / bh;
    const double R0 = std::max(2.0, 0.5 * (x + std::sqrt(x * x + 4.0)));
    const double s0 = std::log(R0);

    // Middle annulus 1/R0 <= |lam| <= R0: stay on the base ray, where
    // Lambda is real, and integrate the recombined entire integrand; it is
    // pole-free and uniformly bounded there (|L_m| <= 2, |exp| <= 1), so no
    // indentation and no half-wave split are needed where they would cancel.
    const cplx e0 = std::polar(1.0, theta0);
    const auto mid = [&](double s) {
        const cplx lam = e0 * std::exp(s);
        return envelope(lam, w0, legendre_flat_integral(lambda_of(lam), m));
    };
    cplx total = adaptive_gauss(mid, -s0, 0.0, tol, 14) + adaptive_gauss(mid, 0.0, s0, tol, 14);

    // Tails: split into the sigma = +-1 half-wave pieces, each decaying like
    // exp(i beta (lam w_sigma - conj(w_sigma)/lam)), and rotate each tail to
    // the half-angle direction of its own phase point w_sigma. The connecting
    // arcs stay in |Lambda| >= T, so no kernel zero is crossed.
    for (int sigma : {+1, -1}) {
        const cplx ws = w0 + double(sigma) * h;
        if (beta * std::abs(ws) < kMinDecayScale)
            throw CornerDegeneracyError("mode_integral: decay rate below threshold");
        double delta = wrap_angle(kPi / 2 - std::arg(ws) - theta0);
        delta = std::clamp(delta, -kPi / 2, kPi / 2);
        const double ths = theta0 + delta / 2;
        const double rate = beta * std::abs(ws) * std::cos(delta / 2);
        const double s_end = std::max(s0 + 1.0, std::log(34.0 / rate));

        const auto half = [&](cplx lam) {
            return envelope(lam, ws, legendre_flat_half(lambda_of(lam), m, sigma));
        };
        const auto arc_out = [&](double th) { return i1 * half(R0 * std::polar(1.0, th)); };
        const auto arc_in = [&](double th) { return i1 * half(std::polar(1.0, th) / R0); };
        const auto ray_out = [&](double s) { return half(std::polar(1.0, ths) * std::exp(s)); };
        const auto ray_in = [&](double s) { return half(std::polar(1.0, ths) * std::exp(-s)); };
        // Contour order 0 -> infinity: inner ray up to 1/R0, arc ths -> theta0,
        // (middle), arc theta0 -> ths, outer ray; dlam/lam = ds or i dtheta.
        total += adaptive_gauss(ray_in, s0, s_end, tol, 14) -
                 adaptive_gauss(arc_in, theta0, ths, tol, 14) +
                 adaptive_gauss(arc_out, theta0, ths, tol, 14) +
                 adaptive_gauss(ray_out, s0, s_end, tol, 14);
    }
    return total;
}

cplx q_integral_at(const PolygonGeometry& geom, cplx z, int j, int p, int sigma, double beta,
                   bool with_prefactor, const QuadParams& quad, DeformationMode mode) {
    const cplx w = z - geom.midpoints[j] + double(sigma) * geom.halfsides[j];
    return kernel_integral(geom, w, j, p, beta, with_prefactor, quad, mode);
}

cplx q_integral(const QKernelRequest& req, const QuadParams& quad, DeformationMode mode) {
    const PolygonGeometry& geom = *req.geom;
    if (std::abs(req.t0) > kCornerMargin)
        throw CornerDegeneracyError("q_integral: t0 too close to a corner");
    const cplx z0 = geom.side_point(req.j0, req.t0);
    return q_integral_at(geom, z0, req.j, req.p, req.sigma, req.beta, req.with_prefactor, quad,
                         mode);
}

cplx u_dirichlet_field(const PolygonGeometry& geom, cplx z, const DirichletData& data, double beta,
                       const QuadParams& quad) {
    // i beta sum_j sum_m d_m Itilde_{j m}(z), Itilde carrying the Dirichlet
    // prefactor (lam h + conj(h)/lam).
    const int M_D = data.order();
    cplx total{0.0, 0.0};
    for (int j = 0; j < geom.n(); ++j)
        for (int m = 0; m <= M_D; ++m)
            total += data.coeff[j][m] * mode_integral(geom, z, j, m, beta, true, quad);
    return cplx(0.0, 1.0) * beta * total;
}

cplx u_dirichlet_field(const PolygonGeometry& geom, const SidePoint& z0, const DirichletData& data,
                       double beta, const QuadParams& quad) {
    if (std::abs(z0.t) > kCornerMargin)
        throw CornerDegeneracyError("u_dirichlet_field: t0 too close to a corner");
    return u_dirichlet_field(geom, z0.z, data, beta, quad);
}

cplx u_neumann_field(const PolygonGeometry& geom, cplx z, const NeumannCoefficients& c, double beta,
                     const QuadParams& quad) {
    const int M = c.order();
    cplx total{0.0, 0.0};
    for (int j = 0; j < geom.n(); ++j)
        for (int m = 0; m <= M; ++m)
            total += c.coeff[j][m] * mode_integral(geom, z, j, m, beta, false, quad);
    return cplx(0.0, 1.0) * total;
}

std::vector<cplx> side_limit_row(const PolygonGeometry& geom, const SidePoint& z0, int M,
                                 double beta, const QuadParams& quad) {
    if (std::abs(z0.t) > kCornerMargin)
        throw CornerDegeneracyError("side_limit_row: t0 too close to a corner");
    const int n = geom.n();
    std::vector<cplx> row(n * (M + 1), cplx{});
    for (int j = 0; j < n; ++j)
        for (int m = 0; m <= M; ++m)
            row[j * (M + 1) + m] =
                cplx(0.0, 1.0) * mode_integral(geom, z0.z, j, m, beta, false, quad);
    return row;
}

} // namespace utscat
