// Acceptance gate: one line of output per criterion, exit status = number of
// failed criteria. Runs the full solver end to end plus the analytic oracles.
#include "utscat/contourquad.hpp"
#include "utscat/reference.hpp"
#include "utscat/solver.hpp"
#include "utscat/specfun.hpp"
#include "utscat/supplement.hpp"
#include "utscat/transforms.hpp"
#include "utscat/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

using namespace utscat;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

struct SolveErrors {
    double neumann = 0.0, f0 = 0.0, seconds = 0.0;
};

SolveErrors solve_example(const PolygonGeometry& geom, const HankelSolution& sol, int M, int N_f) {
    QuadParams quad;
    const auto [data, cExact] = traces_on_polygon(sol, geom, M + 4);
    const auto t0 = std::chrono::steady_clock::now();
    const LinearSystem sys =
        build_system(geom, default_plan(geom, M, N_f), data, M, N_f, sol.beta, quad, 4);
    const SolveReport rep = solve_least_squares(sys);
    const auto t1 = std::chrono::steady_clock::now();

    SolveErrors out;
    out.seconds = std::chrono::duration<double>(t1 - t0).count();
    for (int j = 0; j < geom.n(); ++j)
        for (int k = 0; k <= 200; ++k) {
            const double t = -1.0 + 2.0 * k / 200.0;
            out.neumann = std::max(out.neumann, std::abs(neumann_trace(rep, j, t) -
                                                         exact_neumann_trace(sol, geom, j, t)));
        }
    const AmplitudeCoefficients aTrue = true_amplitude(sol, N_f);
    for (int k = 0; k <= 360; ++k) {
        const double phi = 2 * kPi * k / 360.0;
        out.f0 = std::max(out.f0, std::abs(amplitude_eval(rep.amplitude, phi) -
                                           amplitude_eval(aTrue, phi)));
    }
    return out;
}

} // namespace

int main() {
    const PolygonGeometry geom = example_square();
    QuadParams quad;

    // 1-2: end-to-end reproduction of the two exact-solution examples.
    {
        const SolveErrors e1 = solve_example(geom, example1(), 8, 8);
        report(1, e1.neumann <= 5e-4 && e1.f0 <= 1e-3 && e1.seconds <= 60.0,
               fmt("neumann %.3e (<=5e-4), f0 %.3e (<=1e-3), %.1f s (<=60)", e1.neumann, e1.f0,
                   e1.seconds));
        const SolveErrors e2 = solve_example(geom, example2(), 8, 8);
        report(2, e2.neumann <= 5e-3 && e2.f0 <= 1e-2,
               fmt("neumann %.3e (<=5e-3), f0 %.3e (<=1e-2)", e2.neumann, e2.f0));
    }

    // 3: exterior global relation with exact traces and exact amplitude.
    {
        double worst = 0.0;
        for (int ex = 1; ex <= 2; ++ex) {
            const HankelSolution sol = (ex == 1) ? example1() : example2();
            const auto [data, cN] = traces_on_polygon(sol, geom, 20);
            const AmplitudeCoefficients a = true_amplitude(sol, 8);
            for (int k = 0; k < 64; ++k) {
                const cplx lam = std::polar(1.0, 2 * kPi * k / 64 + kPi / 64);
                bool excluded = false;
                for (const cplx bad : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)})
                    excluded = excluded || std::abs(lam - bad) < 0.1;
                if (excluded) continue;
                double scale = 0.0;
                for (int j = 0; j < 4; ++j)
                    scale = std::max(scale, std::abs(uhat_dirichlet(geom, j, lam, data, 1.0) +
                                                     uhat_neumann(geom, j, lam, cN, 1.0)));
                worst = std::max(worst,
                                 std::abs(global_residual(geom, lam, cN, a, data, 1.0)) / scale);
            }
        }
        report(3, worst <= 1e-6, fmt("relative residual %.3e (<=1e-6)", worst));
    }

    // 4: interior global relation on the manufactured solution e^{2 beta x}.
    {
        const auto [data, cN] = manufactured_interior_traces(geom, 1.0, 16);
        const AmplitudeCoefficients none = AmplitudeCoefficients::zeros(0);
        double worst = 0.0;
        for (int k = 0; k < 32; ++k) {
            const cplx lam = std::polar(1.0, 2 * kPi * k / 32 + kPi / 32);
            worst = std::max(worst, std::abs(global_residual(geom, lam, cN, none, data, 1.0, true)));
        }
        report(4, worst <= 1e-8, fmt("residual %.3e (<=1e-8)", worst));
    }

    // 5: deformed-with-residue kernel evaluation vs the half-angle contour
    // and vs the indented-base-ray brute-force oracle, over the full grid.
    {
        double dev = 0.0, orc = 0.0;
        for (int p = 0; p <= 8; ++p)
            for (int sigma : {+1, -1})
                for (int j = 0; j < 4; ++j)
                    for (int j0 = 0; j0 < 4; ++j0)
                        for (double t0 : {-0.8, 0.0, 0.8}) {
                            QKernelRequest req{&geom, p, j, j0, t0, sigma, 1.0, false};
                            const cplx half = q_integral(req, quad, DeformationMode::HalfAngle);
                            const cplx full = q_integral(req, quad, DeformationMode::FullAngle);
                            dev = std::max(dev, std::abs(half - full));

                            const cplx z0 = geom.side_point(j0, t0);
                            const cplx w = z0 - geom.midpoints[j] +
                                           double(sigma) * geom.halfsides[j];
                            KernelIntegrand f{w, -std::conj(w), p, geom.halfsides[j], 1.0, false};
                            ContourPlan plan;
                            plan.theta0 = geom.ray_angles[j];
                            plan.indent_side = geom.indentation_sign(j);
                            plan.quad = quad;
                            orc = std::max(orc, std::abs(half - indented_ray_integral(f, plan)));
                        }
        report(5, dev <= 1e-9 && orc <= 1e-4,
               fmt("vs full angle %.3e (<=1e-9), vs indented oracle %.3e (<=1e-4)", dev, orc));
    }

    // 6: residue anchors of the first side's kernel at its on-ray zero.
    {
        const double t0 = 0.3;
        const cplx w = (t0 + 1.0) * geom.halfsides[0];
        const cplx ref[3] = {{0.5, 0.0},
                             cplx(0, 1) * (t0 + 1.0) / 2.0,
                             cplx(-(t0 + 1.0) * (t0 + 1.0) / 4.0 - 1.0 / 16.0, 0.0)};
        double e0 = 0.0, e12 = 0.0;
        for (int p = 0; p <= 2; ++p) {
            KernelIntegrand f{w, -std::conj(w), p, geom.halfsides[0], 1.0, false};
            const cplx res = circle_residue([&](cplx lam) { return f(lam); }, cplx(-1.0, 0.0),
                                            quad.residue_radius, quad.residue_points);
            if (p == 0)
                e0 = std::abs(res - ref[0]);
            else
                e12 = std::max(e12, std::abs(res - ref[p]));
        }
        report(6, e0 <= 1e-10 && e12 <= 1e-9,
               fmt("p=0 %.3e (<=1e-10), p=1,2 %.3e (<=1e-9)", e0, e12));
    }

    // 7: closed-form Legendre transform vs brute quadrature, plus branch
    // continuity at the small-argument switch.
    {
        std::mt19937 rng(2026);
        std::uniform_real_distribution<double> logmag(std::log(0.5), std::log(50.0));
        std::uniform_real_distribution<double> ang(-kPi, kPi);
        std::uniform_int_distribution<int> deg(0, 12);
        double worst = 0.0;
        for (int s = 0; s < 50; ++s) {
            const int m = deg(rng);
            const cplx L = std::polar(std::exp(logmag(rng)), ang(rng));
            const cplx ref = adaptive_gauss(
                [&](double t) { return std::exp(cplx(0, -1) * L * t) * legendre_eval(m, t); },
                -1.0, 1.0, 1e-14);
            // Absolute floor 1e-4: below it the brute quadrature itself has
            // no relative accuracy left.
            worst = std::max(worst, std::abs(legendre_flat_integral(L, m) - ref) /
                                        std::max(std::abs(ref), 1e-4));
        }
        double cont = 0.0;
        for (int m : {2, 6, 10, 12}) {
            const cplx L = std::polar(flat_integral_switch_radius(m), 0.7);
            const cplx s = legendre_flat_integral_series(L, m);
            cont = std::max(cont, std::abs(legendre_flat_integral_closed(L, m) - s) / std::abs(s));
        }
        report(7, worst <= 1e-10 && cont <= 1e-9,
               fmt("vs quadrature %.3e (<=1e-10), continuity %.3e (<=1e-9)", worst, cont));
    }

    // 8: boundary-limit equation closes on exact traces at degree 16.
    {
        const int M = 16;
        double worst = 0.0;
        const auto [t5, w5] = gauss_legendre(5);
        for (int ex = 1; ex <= 2; ++ex) {
            const HankelSolution sol = (ex == 1) ? example1() : example2();
            const auto [data, cN] = traces_on_polygon(sol, geom, M);
            for (int j0 = 0; j0 < 4; ++j0)
                for (double t0 : t5) {
                    const SidePoint z0 = make_side_point(geom, j0, t0);
                    const auto row = side_limit_row(geom, z0, M, 1.0, quad);
                    cplx acc = u_dirichlet_field(geom, z0, data, 1.0, quad);
                    for (int j = 0; j < 4; ++j)
                        for (int m = 0; m <= M; ++m)
                            acc += row[j * (M + 1) + m] * cN.coeff[j][m];
                    worst = std::max(worst, std::abs(acc));
                }
        }
        report(8, worst <= 1e-5, fmt("residual %.3e (<=1e-5)", worst));
    }

    // 9: example-1 error decays with the expansion order.
    {
        const double e2 = solve_example(geom, example1(), 2, 8).neumann;
        const double e4 = solve_example(geom, example1(), 4, 8).neumann;
        const double e8 = solve_example(geom, example1(), 8, 8).neumann;
        report(9, e4 <= e2 && e8 <= 2.0 * e4,
               fmt("M=2: %.3e, M=4: %.3e, M=8: %.3e (non-increasing, 2x plateau)", e2, e4, e8));
    }

    // 10: far-field deviation decays like r^-3 (factor 8 from r=20 to r=40).
    {
        double worst = 0.0;
        for (int ex = 1; ex <= 2; ++ex) {
            const HankelSolution sol = (ex == 1) ? example1() : example2();
            const double ratio =
                farfield_expansion_check(sol, 20.0, 0.7) / farfield_expansion_check(sol, 40.0, 0.7);
            worst = std::max(worst, std::abs(ratio - 8.0));
        }
        report(10, worst <= 2.4, fmt("|ratio - 8| %.3e (<=2.4)", worst));
    }

    return g_failures;
}
