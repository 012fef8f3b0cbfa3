#include "utscat/contourquad.hpp"
#include "utscat/errors.hpp"
#include "utscat/geometry.hpp" // wrap_angle

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace utscat {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kOracleHalfWidth = 13.0;

cplx int_pow(cplx z, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

// 15-point Gauss-Legendre on [-1, 1].
const double kGx[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601700, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601700,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
const double kGw[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

cplx gauss15(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    cplx s{0.0, 0.0};
    for (int i = 0; i < 15; ++i) s += kGw[i] * f(c + hw * kGx[i]);
    return hw * s;
}

cplx adaptive_gauss_impl(const std::function<cplx(double)>& f, double a, double b, double tol,
                         int depth, cplx whole) {
    const double m = 0.5 * (a + b);
    const cplx left = gauss15(f, a, m), right = gauss15(f, m, b);
    if (depth <= 0 || std::abs(left + right - whole) < tol) return left + right;
    return adaptive_gauss_impl(f, a, m, 0.5 * tol, depth - 1, left) +
           adaptive_gauss_impl(f, m, b, 0.5 * tol, depth - 1, right);
}

} // namespace

cplx adaptive_gauss(const std::function<cplx(double)>& f, double a, double b, double tol,
                    int max_depth) {
    return adaptive_gauss_impl(f, a, b, tol, max_depth, gauss15(f, a, b));
}

QuadParams QuadParams::from_tolerance(double tol) {
    QuadParams q;
    q.tolerance = tol;
    q.step = std::clamp(0.05 * std::pow(tol / 1e-10, 0.15), 0.01, 0.4);
    return q;
}

cplx KernelIntegrand::operator()(cplx lam) const {
    const cplx denom = lam * h - std::conj(h) / lam;
    cplx v = std::exp(exponent(lam)) / (int_pow(denom, p + 1) * lam);
    if (with_prefactor) v *= lam * h + std::conj(h) / lam;
    return v;
}

std::array<cplx, 2> KernelIntegrand::poles() const {
    const cplx root = std::polar(1.0, -std::arg(h));
    return {root, -root};
}

cplx ray_integral(const std::function<cplx(cplx)>& f, double theta, const QuadParams& quad) {
    const cplx dir = std::polar(1.0, theta);
    const double S = quad.half_width, hs = quad.step;
    auto g = [&](double s) { // integrand after lam = dir e^s, d lam = lam ds
        const cplx lam = dir * std::exp(s);
        return f(lam) * lam;
    };
    if (std::abs(g(S)) > 1e-12 || std::abs(g(-S)) > 1e-12)
        throw NoDecayError("ray_integral: integrand does not decay at truncation radius");
    cplx sum{0.0, 0.0};
    const int nsteps = static_cast<int>(std::ceil(2.0 * S / hs));
    for (int k = 0; k <= nsteps; ++k) {
        const double s = -S + k * (2.0 * S / nsteps);
        const double w = (k == 0 || k == nsteps) ? 0.5 : 1.0;
        sum += w * g(s);
    }
    return sum * (2.0 * S / nsteps);
}

cplx ray_integral(const KernelIntegrand& f, double theta, const QuadParams& quad) {
    for (const cplx& pole : f.poles()) {
        const double d = wrap_angle(std::arg(pole) - theta);
        if (std::abs(d) < kPi / 2 && std::abs(std::sin(d)) * std::abs(pole) < 0.05)
            throw PoleOnRayError("ray_integral: kernel pole too close to the ray");
    }
    // Decay check on the exponent itself (the measure factor always decays).
    const cplx dir = std::polar(1.0, theta);
    const double S = quad.half_width;
    if (f.exponent(dir * std::exp(S)).real() > -30.0 ||
        f.exponent(dir * std::exp(-S)).real() > -30.0)
        throw NoDecayError("ray_integral: exponent does not decay at truncation radius");
    return ray_integral(std::function<cplx(cplx)>(std::cref(f)), theta, quad);
}

cplx indented_ray_integral(const KernelIntegrand& f, const ContourPlan& plan) {
    const double theta0 = plan.theta0;
    const cplx dir = std::polar(1.0, theta0);
    const auto poles = f.poles();

    int on_ray = -1;
    int n_on_ray = 0;
    for (int i = 0; i < 2; ++i) {
        if (std::abs(wrap_angle(std::arg(poles[i]) - theta0)) < 1e-9) {
            on_ray = i;
            ++n_on_ray;
        }
    }
    if (n_on_ray > 1) throw TwoPolesOnRayError("indented_ray_integral: two poles on ray");
    if (on_ray >= 0 && std::abs(poles[on_ray]) < plan.eps)
        throw PoleAtOriginError("indented_ray_integral: pole indistinguishable from origin");

    auto g = [&](double s) {
        const cplx lam = dir * std::exp(s);
        return f(lam) * lam;
    };

    const double S = kOracleHalfWidth;
    const double tol = std::max(plan.quad.tolerance * 0.1, 1e-9);

    auto integrate = [&](double a, double b) {
        // Pre-split into ~unit panels so the bisection depth stays modest.
        cplx sum{0.0, 0.0};
        const int npanels = std::max(1, static_cast<int>(std::ceil(b - a)));
        for (int k = 0; k < npanels; ++k) {
            const double pa = a + (b - a) * k / npanels;
            const double pb = a + (b - a) * (k + 1) / npanels;
            sum += adaptive_gauss(g, pa, pb, tol, 14);
        }
        return sum;
    };

    if (on_ray < 0) return integrate(-S, S);

    const cplx pole = poles[on_ray];
    const double s_pole = std::log(std::abs(pole));
    const double eps = plan.eps;
    const double sm = std::log(std::abs(pole) - eps);
    const double sp = std::log(std::abs(pole) + eps);
    (void)s_pole;

    cplx result = integrate(-S, sm) + integrate(sp, S);

    // Semicircular detour: from (|pole|-eps) e^{i theta0} to (|pole|+eps) e^{i theta0},
    // bulging toward indent_side * i * pole. indent_side = +1 traverses the arc
    // clockwise (d phi = -pi), indent_side = -1 counterclockwise.
    const double phi0 = theta0 + kPi;
    const double phi1 = phi0 - plan.indent_side * kPi;
    auto arc = [&](double phi) {
        const cplx lam = pole + eps * std::polar(1.0, phi);
        return f(lam) * cplx(0, 1) * eps * std::polar(1.0, phi);
    };
    const int arc_panels = 8;
    for (int k = 0; k < arc_panels; ++k) {
        const double a = phi0 + (phi1 - phi0) * k / arc_panels;
        const double b = phi0 + (phi1 - phi0) * (k + 1) / arc_panels;
        result += gauss15(arc, a, b);
    }
    return result;
}

cplx circle_residue(const std::function<cplx(cplx)>& f, cplx center, double radius,
                    int npoints) {
    cplx sum{0.0, 0.0};
    for (int k = 0; k < npoints; ++k) {
        const double phi = 2.0 * kPi * k / npoints;
        const cplx e = std::polar(1.0, phi);
        sum += f(center + radius * e) * e;
    }
    return sum * (radius / npoints);
}

cplx deformed_integral_with_crossing(const KernelIntegrand& f, double theta0, double theta1,
                                     int indent_side, const QuadParams& quad) {
    const double delta = theta1 - theta0;
    cplx value = ray_integral(f, theta1, quad);
    if (delta == 0.0) return value;

    const int sweep_sign = delta > 0 ? +1 : -1;
    for (const cplx& pole : f.poles()) {
        const double d = wrap_angle(std::arg(pole) - theta0);
        bool crossed = false;
        if (std::abs(d) < 1e-9) {
            // On-ray pole: the indentation decides which sweep wraps it.
            crossed = (sweep_sign == +1 && indent_side == -1) ||
                      (sweep_sign == -1 && indent_side == +1);
        } else if ((d > 0.0) == (delta > 0.0) && std::abs(d) < std::abs(delta)) {
            crossed = true;
        }
        if (crossed) {
            const cplx res = circle_residue(std::function<cplx(cplx)>(std::cref(f)), pole,
                                            quad.residue_radius, quad.residue_points);
            value += double(sweep_sign) * cplx(0, 2.0 * kPi) * res;
        }
    }
    return value;
}

} // namespace utscat
