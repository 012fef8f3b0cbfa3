#include "utscat/reference.hpp"

#include "utscat/errors.hpp"
#include "utscat/specfun.hpp"

#include <cmath>
#include <numbers>

namespace utscat {

namespace {

// (-i)^n for integer n >= 0
cplx neg_i_pow(int n) {
    static const cplx table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return table[((n % 4) + 4) % 4];
}

} // namespace

FieldValue exact_eval(const HankelSolution& sol, cplx z) {
    const double r = std::abs(z);
    if (r <= 0.0) throw OriginSingularError("exact_eval: z must be nonzero");
    const double phi = std::arg(z);
    const double x = 2.0 * sol.beta * r;
    const int nu = sol.nu;

    // radial part R(r) = (2/pi) (-i)^{nu+1} K_nu(2 beta r)
    const cplx pref = (2.0 / std::numbers::pi) * neg_i_pow(nu + 1);
    const double Km1 = bessel_k(std::abs(nu - 1), x);
    const double K0 = bessel_k(nu, x);
    const double Kp1 = bessel_k(nu + 1, x);
    const cplx R = pref * K0;
    // K_nu'(x) = -(K_{nu-1} + K_{nu+1})/2 ; d/dr = 2 beta d/dx
    const cplx Rp = pref * (-(Km1 + Kp1) / 2.0) * (2.0 * sol.beta);

    const cplx ep = std::exp(cplx(0.0, nu * phi));
    const cplx em = std::exp(cplx(0.0, -nu * phi));
    const cplx ang = sol.A * ep + sol.B * em;
    const cplx dang = cplx(0.0, double(nu)) * (sol.A * ep - sol.B * em);

    const cplx ur = Rp * ang;
    const cplx uphi = R * dang;

    const double c = std::cos(phi), s = std::sin(phi);
    FieldValue out;
    out.u = R * ang;
    out.ux = ur * c - uphi * s / r;
    out.uy = ur * s + uphi * c / r;
    return out;
}

cplx exact_neumann_trace(const HankelSolution& sol, const PolygonGeometry& geom, int j, double t) {
    const cplx z = geom.side_point(j, t);
    const FieldValue f = exact_eval(sol, z);
    const cplx h = geom.halfsides[j];
    const cplx nhat = cplx(0.0, -1.0) * h / std::abs(h); // outward unit normal
    return (f.ux * nhat.real() + f.uy * nhat.imag()) * std::abs(h);
}

std::pair<DirichletData, NeumannCoefficients> traces_on_polygon(const HankelSolution& sol,
                                                                const PolygonGeometry& geom,
                                                                int M_D) {
    const int n = geom.n();
    const int nq = M_D + 8;
    const auto [xs, ws] = gauss_legendre(nq);

    DirichletData d;
    NeumannCoefficients c;
    d.coeff.assign(n, std::vector<cplx>(M_D + 1, cplx(0, 0)));
    c.coeff.assign(n, std::vector<cplx>(M_D + 1, cplx(0, 0)));

    for (int j = 0; j < n; ++j) {
        for (int q = 0; q < nq; ++q) {
            const double t = xs[q];
            const cplx z = geom.side_point(j, t);
            const FieldValue f = exact_eval(sol, z);
            const cplx h = geom.halfsides[j];
            const cplx nhat = cplx(0.0, -1.0) * h / std::abs(h);
            const cplx un = (f.ux * nhat.real() + f.uy * nhat.imag()) * std::abs(h);
            const auto P = legendre_all(M_D, t);
            for (int m = 0; m <= M_D; ++m) {
                const double proj = (2.0 * m + 1.0) / 2.0 * ws[q] * P[m];
                d.coeff[j][m] += proj * f.u;
                c.coeff[j][m] += proj * un;
            }
        }
    }
    return {std::move(d), std::move(c)};
}

AmplitudeCoefficients true_amplitude(const HankelSolution& sol, int N_f) {
    AmplitudeCoefficients a = AmplitudeCoefficients::zeros(N_f);
    const cplx fac = neg_i_pow(sol.nu);
    a.at(sol.nu) += fac * sol.A;
    a.at(-sol.nu) += fac * sol.B;
    return a;
}

double farfield_expansion_check(const HankelSolution& sol, double r, double phi) {
    const FieldValue f = exact_eval(sol, cplx(r * std::cos(phi), r * std::sin(phi)));
    const double beta = sol.beta;
    // sqrt(1/(pi i beta r)) e^{i(2 i beta r - pi/4)} = -i sqrt(1/(pi beta r)) e^{-2 beta r}
    const cplx pref = cplx(0.0, -1.0) * std::sqrt(1.0 / (std::numbers::pi * beta * r)) *
                      std::exp(-2.0 * beta * r);
    const cplx ang = sol.A * std::exp(cplx(0.0, sol.nu * phi)) +
                     sol.B * std::exp(cplx(0.0, -sol.nu * phi));
    const cplx f0 = neg_i_pow(sol.nu) * ang;
    double r1, r2; // f1/f0, f2/f0
    if (sol.nu == 0) {
        r1 = -1.0 / (16.0 * beta);
        r2 = 9.0 / (512.0 * beta * beta);
    } else if (sol.nu == 1) {
        r1 = 3.0 / (16.0 * beta);
        r2 = -15.0 / (512.0 * beta * beta);
    } else {
        throw OrderTooLargeError("farfield_expansion_check: only nu = 0, 1 supported");
    }
    const cplx series = f0 * (1.0 + r1 / r + r2 / (r * r));
    return std::abs(f.u / pref - series);
}

} // namespace utscat
