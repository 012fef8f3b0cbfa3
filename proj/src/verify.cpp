#include "utscat/verify.hpp"

#include "utscat/errors.hpp"
#include "utscat/solver.hpp"
#include "utscat/specfun.hpp"
#include "utscat/supplement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace utscat {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_kernel_zero(const PolygonGeometry& geom, cplx lam, double radius) {
    for (int j = 0; j < geom.n(); ++j) {
        const cplx pole = geom.on_ray_pole(j);
        if (std::abs(lam - pole) < radius || std::abs(lam + pole) < radius) return true;
    }
    return false;
}

// Brute-force \int_{-1}^{1} e^{-i Lambda t} P_m(t) dt. Absolute accuracy
// ~1e-15; the closed form dips far below that for large m at small |Lambda|,
// so comparisons carry an absolute floor on the scale.
cplx flat_integral_brute(cplx Lambda, int m) {
    return adaptive_gauss(
        [&](double t) { return std::exp(cplx(0, -1) * Lambda * t) * legendre_eval(m, t); }, -1.0,
        1.0, 1e-14);
}

double flat_integral_scale(cplx ref) { return std::max(std::abs(ref), 1e-4); }

SuiteResult suite_specfun(const QuadParams&) {
    SuiteResult out{"specfun", {}};

    double worst = 0.0;
    const cplx samples[] = {{0.7, 0.0}, {5.0, 0.0}, {20.0, 0.0}, {3.0, 2.0}, {0.9, -0.4}};
    for (int m : {0, 3, 8, 12})
        for (cplx L : samples) {
            const cplx ref = flat_integral_brute(L, m);
            worst = std::max(worst,
                             std::abs(legendre_flat_integral(L, m) - ref) / flat_integral_scale(ref));
        }
    out.checks.push_back({"flat-integral-vs-quadrature", worst, 1e-10});

    worst = 0.0;
    for (int m : {2, 6, 10}) {
        const double tau = flat_integral_switch_radius(m);
        for (double phase : {0.0, kPi / 3, -kPi / 2}) {
            const cplx L = std::polar(tau, phase);
            const double scale = std::max(std::abs(legendre_flat_integral_series(L, m)), 1e-30);
            worst = std::max(worst, std::abs(legendre_flat_integral_closed(L, m) -
                                            legendre_flat_integral_series(L, m)) /
                                        scale);
        }
    }
    out.checks.push_back({"flat-integral-branch-continuity", worst, 1e-9});

    const double k0 = std::abs(bessel_k(0, 2.0) - 0.11389387274953343);
    const double k1 = std::abs(bessel_k(1, 2.0) - 0.13986588181652243);
    out.checks.push_back({"bessel-k-anchors", std::max(k0, k1), 1e-13});

    const auto [xs, ws] = gauss_legendre(13);
    double q = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) q += ws[i] * std::pow(xs[i], 24);
    out.checks.push_back({"gauss-legendre-exactness", std::abs(q - 2.0 / 25.0), 1e-14});
    return out;
}

SuiteResult suite_global_relation(const QuadParams&) {
    SuiteResult out{"global-relation", {}};
    const PolygonGeometry geom = example_square();

    for (int ex = 1; ex <= 2; ++ex) {
        const HankelSolution sol = (ex == 1) ? example1() : example2();
        const auto [data, cN] = traces_on_polygon(sol, geom, 16);
        const AmplitudeCoefficients a = true_amplitude(sol, 8);
        double worst = 0.0;
        for (int k = 0; k < 64; ++k) {
            const cplx lam = std::polar(1.0, 2 * kPi * k / 64 + kPi / 64);
            if (near_kernel_zero(geom, lam, 0.1)) continue;
            double scale = 0.0;
            for (int j = 0; j < geom.n(); ++j)
                scale = std::max(scale, std::abs(uhat_dirichlet(geom, j, lam, data, sol.beta) +
                                                 uhat_neumann(geom, j, lam, cN, sol.beta)));
            const cplx res = global_residual(geom, lam, cN, a, data, sol.beta);
            worst = std::max(worst, std::abs(res) / scale);
        }
        out.checks.push_back(
            {"exterior-relation-example-" + std::to_string(ex), worst, 1e-6});
    }

    const double beta = 1.0;
    const auto [dataI, cI] = manufactured_interior_traces(geom, beta, 16);
    const AmplitudeCoefficients zero = AmplitudeCoefficients::zeros(0);
    double worst = 0.0;
    for (int k = 0; k < 32; ++k) {
        const cplx lam = std::polar(1.0, 2 * kPi * k / 32 + kPi / 32);
        worst = std::max(worst,
                         std::abs(global_residual(geom, lam, cI, zero, dataI, beta, true)));
    }
    out.checks.push_back({"interior-manufactured", worst, 1e-8});
    return out;
}

SuiteResult suite_deformation(const QuadParams& quad) {
    SuiteResult out{"deformation", {}};
    const PolygonGeometry geom = example_square();
    const double beta = 1.0;

    double worst = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int j0 = 0; j0 < 4; ++j0)
            for (int p : {0, 4, 8})
                for (int sigma : {+1, -1}) {
                    QKernelRequest req{&geom, p, j, j0, 0.0, sigma, beta, false};
                    const cplx half = q_integral(req, quad, DeformationMode::HalfAngle);
                    const cplx full = q_integral(req, quad, DeformationMode::FullAngle);
                    worst = std::max(worst, std::abs(half - full));
                }
    out.checks.push_back({"full-vs-half-angle", worst, 1e-9});

    struct Case {
        int j, j0, p, sigma;
        double t0;
    };
    const Case cases[] = {{0, 0, 0, +1, 0.0}, {0, 2, 3, -1, 0.5}, {1, 3, 1, +1, -0.4}};
    worst = 0.0;
    for (const Case& c : cases) {
        QKernelRequest req{&geom, c.p, c.j, c.j0, c.t0, c.sigma, beta, false};
        const cplx val = q_integral(req, quad);
        const cplx z0 = geom.side_point(c.j0, c.t0);
        const cplx w = z0 - geom.midpoints[c.j] + double(c.sigma) * geom.halfsides[c.j];
        KernelIntegrand f{w, -std::conj(w), c.p, geom.halfsides[c.j], beta, false};
        ContourPlan plan;
        plan.theta0 = geom.ray_angles[c.j];
        plan.indent_side = geom.indentation_sign(c.j);
        plan.quad = quad;
        worst = std::max(worst, std::abs(val - indented_ray_integral(f, plan)));
    }
    out.checks.push_back({"deformed-vs-indented-oracle", worst, 1e-4});

    // Residues of the side-0 kernel at its on-ray zero lambda = -1,
    // against a once-computed symbolic-derivative oracle.
    const double t0 = 0.3;
    const int sigma = +1;
    const cplx w = (t0 + sigma) * geom.halfsides[0];
    const cplx res_ref[3] = {
        {0.5, 0.0},
        cplx(0, 1) * beta * (t0 + sigma) / 2.0,
        cplx(-beta * beta * (t0 + sigma) * (t0 + sigma) / 4.0 - 1.0 / 16.0, 0.0)};
    worst = 0.0;
    for (int p = 0; p <= 2; ++p) {
        KernelIntegrand f{w, -std::conj(w), p, geom.halfsides[0], beta, false};
        const cplx res = circle_residue([&](cplx lam) { return f(lam); }, cplx(-1.0, 0.0),
                                        quad.residue_radius, quad.residue_points);
        worst = std::max(worst, std::abs(res - res_ref[p]));
        if (p == 0)
            out.checks.push_back({"residue-anchor-p0", std::abs(res - res_ref[0]), 1e-10});
    }
    out.checks.push_back({"residue-anchors-p12", worst, 1e-9});
    return out;
}

SuiteResult suite_side_limit(const QuadParams& quad) {
    SuiteResult out{"side-limit", {}};
    const PolygonGeometry geom = example_square();
    const double beta = 1.0;
    const int M = 16;

    for (int ex = 1; ex <= 2; ++ex) {
        const HankelSolution sol = (ex == 1) ? example1() : example2();
        const auto [data, cN] = traces_on_polygon(sol, geom, M);
        double worst = 0.0;
        for (int j0 = 0; j0 < 4; ++j0)
            for (double t0 : {-0.5, 0.0, 0.5}) {
                const SidePoint z0 = make_side_point(geom, j0, t0);
                const auto row = side_limit_row(geom, z0, M, beta, quad);
                cplx acc = u_dirichlet_field(geom, z0, data, beta, quad);
                for (int j = 0; j < 4; ++j)
                    for (int m = 0; m <= M; ++m) acc += row[j * (M + 1) + m] * cN.coeff[j][m];
                worst = std::max(worst, std::abs(acc));
            }
        out.checks.push_back(
            {"boundary-limit-exact-traces-example-" + std::to_string(ex), worst, 1e-5});
    }

    const int Ms = 4;
    const auto r0 = side_limit_row(geom, make_side_point(geom, 0, 0.3), Ms, beta, quad);
    const auto r1 = side_limit_row(geom, make_side_point(geom, 1, 0.3), Ms, beta, quad);
    double scale = 0.0, diff = 0.0;
    for (const cplx& v : r0) scale = std::max(scale, std::abs(v));
    for (int j = 0; j < 4; ++j)
        for (int m = 0; m <= Ms; ++m)
            diff = std::max(diff, std::abs(r1[((j + 1) % 4) * (Ms + 1) + m] -
                                           r0[j * (Ms + 1) + m]));
    out.checks.push_back({"square-rotation-symmetry", diff / scale, 1e-10});

    const auto [d1, c1] = traces_on_polygon(example1(), geom, 16);
    const cplx center = u_dirichlet_field(geom, cplx(0.0, 0.0), d1, beta, quad) +
                        u_neumann_field(geom, cplx(0.0, 0.0), c1, beta, quad);
    out.checks.push_back({"supplementary-relation-at-center", std::abs(center), 1e-5});
    return out;
}

SuiteResult suite_examples(const QuadParams& quad, int n_threads) {
    SuiteResult out{"examples", {}};
    const PolygonGeometry geom = example_square();
    const int M = 8, N_f = 8, M_D = M + 4;

    const double f0_bound[2] = {1e-3, 1e-2};
    const double neu_bound[2] = {5e-4, 5e-3};
    for (int ex = 1; ex <= 2; ++ex) {
        const HankelSolution sol = (ex == 1) ? example1() : example2();
        const auto [data, cExact] = traces_on_polygon(sol, geom, M_D);
        const CollocationPlan plan = default_plan(geom, M, N_f);
        const LinearSystem sys = build_system(geom, plan, data, M, N_f, sol.beta, quad, n_threads);
        const SolveReport rep = solve_least_squares(sys);
        const AmplitudeCoefficients aTrue = true_amplitude(sol, N_f);

        double ferr = 0.0;
        for (int k = 0; k <= 360; ++k) {
            const double phi = 2 * kPi * k / 360.0;
            ferr = std::max(ferr, std::abs(amplitude_eval(rep.amplitude, phi) -
                                           amplitude_eval(aTrue, phi)));
        }
        out.checks.push_back(
            {"example-" + std::to_string(ex) + "-amplitude", ferr, f0_bound[ex - 1]});

        double nerr = 0.0;
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k <= 200; ++k) {
                const double t = -1.0 + 2.0 * k / 200.0;
                nerr = std::max(nerr, std::abs(neumann_trace(rep, j, t) -
                                               exact_neumann_trace(sol, geom, j, t)));
            }
        out.checks.push_back(
            {"example-" + std::to_string(ex) + "-neumann-trace", nerr, neu_bound[ex - 1]});

        const double ratio =
            farfield_expansion_check(sol, 20.0, 0.7) / farfield_expansion_check(sol, 40.0, 0.7);
        out.checks.push_back(
            {"example-" + std::to_string(ex) + "-farfield-decay", std::abs(ratio - 8.0), 2.4});
    }
    return out;
}

} // namespace

bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass(); });
}

std::vector<std::string> verify_suite_names() {
    return {"specfun", "global-relation", "deformation", "side-limit", "examples"};
}

PolygonGeometry example_square() {
    return build_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

std::pair<DirichletData, NeumannCoefficients> manufactured_interior_traces(
    const PolygonGeometry& geom, double beta, int M) {
    const int n = geom.n();
    const int nq = M + 8;
    const auto [xs, ws] = gauss_legendre(nq);
    DirichletData d;
    d.coeff.assign(n, std::vector<cplx>(M + 1, cplx{}));
    NeumannCoefficients c = NeumannCoefficients::zeros(n, M);
    for (int j = 0; j < n; ++j) {
        const cplx h = geom.halfsides[j];
        const cplx nhat = cplx(0, -1) * h / std::abs(h);
        for (int q = 0; q < nq; ++q) {
            const cplx z = geom.side_point(j, xs[q]);
            const double v = std::exp(2.0 * beta * z.real());
            const double vn = 2.0 * beta * v * nhat.real() * std::abs(h);
            const auto P = legendre_all(M, xs[q]);
            for (int m = 0; m <= M; ++m) {
                const double proj = (2.0 * m + 1.0) / 2.0 * ws[q] * P[m];
                d.coeff[j][m] += proj * v;
                c.coeff[j][m] += proj * vn;
            }
        }
    }
    return {std::move(d), std::move(c)};
}

SuiteResult run_verify_suite(const std::string& name, const QuadParams& quad, int n_threads) {
    if (name == "specfun") return suite_specfun(quad);
    if (name == "global-relation") return suite_global_relation(quad);
    if (name == "deformation") return suite_deformation(quad);
    if (name == "side-limit") return suite_side_limit(quad);
    if (name == "examples") return suite_examples(quad, n_threads);
    throw ConfigError("unknown verify suite: " + name);
}

} // namespace utscat
