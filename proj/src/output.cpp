#include "utscat/output.hpp"

#include "utscat/errors.hpp"
#include "utscat/reference.hpp"
#include "utscat/specfun.hpp"
#include "utscat/supplement.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace utscat {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

json to_pair(cplx z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

struct Series {
    std::vector<double> x, y;
};

/// Minimal line plot: solid computed curves, dashed reference curves,
/// shared axes box with printed data ranges.
void write_svg(const std::string& path, const std::string& title,
               const std::vector<std::pair<std::string, Series>>& solid,
               const std::vector<std::pair<std::string, Series>>& dashed) {
    const double W = 640, H = 420, L = 60, R = 20, T = 40, B = 40;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto scan = [&](const Series& s) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    };
    for (const auto& [_, s] : solid) scan(s);
    for (const auto& [_, s] : dashed) scan(s);
    if (ymax - ymin < 1e-12) { ymax += 1.0; ymin -= 1.0; }
    if (xmax - xmin < 1e-12) { xmax += 1.0; xmin -= 1.0; }
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ofstream out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
        << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
        << title << "</text>\n";
    out << "<text x=\"" << L << "\" y=\"" << H - 8 << "\" font-size=\"10\">x: [" << xmin << ", "
        << xmax << "]  y: [" << ymin << ", " << ymax << "]</text>\n";
    const char* colors[] = {"#1f4e9c", "#b03030", "#2e7d32", "#7b1fa2"};
    int ci = 0;
    auto emit = [&](const Series& s, const std::string& label, bool dash) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4] << "\" stroke-width=\"1.3\"";
        if (dash) out << " stroke-dasharray=\"6 4\"";
        out << " points=\"";
        for (size_t i = 0; i < s.x.size(); ++i) out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << W - R - 150 << "\" y=\"" << T + 16 + 14 * ci
            << "\" font-size=\"11\" fill=\"" << colors[ci % 4] << "\">" << label
            << (dash ? " (reference)" : "") << "</text>\n";
        ++ci;
    };
    for (const auto& [label, s] : solid) emit(s, label, false);
    for (const auto& [label, s] : dashed) emit(s, label, true);
    out << "</svg>\n";
}

} // namespace

int run_solve(const RunConfig& cfg, int n_threads) {
    const PolygonGeometry geom = build_polygon(cfg.vertices);
    const DirichletData data = config_dirichlet(cfg, geom);

    CollocationPlan plan;
    for (int k = 0; k < cfg.lambda_unit_count; ++k)
        plan.lambdas.push_back(
            std::polar(1.0, 2 * kPi * k / cfg.lambda_unit_count + kPi / cfg.lambda_unit_count));
    for (double r : cfg.circle_radii)
        for (int k = 0; k < cfg.lambda_circle_count; ++k)
            plan.lambdas.push_back(std::polar(
                r, 2 * kPi * k / cfg.lambda_circle_count + kPi / cfg.lambda_circle_count));
    // Corner-clustered nodes, matching default_plan: the trace error of the
    // collocated solution concentrates at t = +-1.
    for (int k = 0; k < cfg.t0_per_side; ++k)
        plan.t0_nodes.push_back(0.98 * std::cos(kPi * k / (cfg.t0_per_side - 1)));

    const auto t0 = std::chrono::steady_clock::now();
    const LinearSystem sys =
        build_system(geom, plan, data, cfg.M, cfg.N_f, cfg.beta, cfg.quad, n_threads);
    const auto t1 = std::chrono::steady_clock::now();
    SolveReport rep = solve_least_squares(sys);
    rep.assemble_seconds = std::chrono::duration<double>(t1 - t0).count();

    std::optional<HankelSolution> ref;
    if (cfg.example == 1) ref = example1(cfg.beta);
    if (cfg.example == 2) ref = example2(cfg.beta);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const auto path = [&](const std::string& name) { return (fs::path(cfg.out_dir) / name).string(); };

    // f0.csv + figure
    Series f0re, f0im, f0re_ref, f0im_ref;
    {
        std::ofstream csv(path("f0.csv"));
        csv << "phi,re_f0,im_f0\n";
        for (int k = 0; k <= 360; ++k) {
            const double phi = 2 * kPi * k / 360.0;
            const cplx f = amplitude_eval(rep.amplitude, phi);
            csv << fmt(phi) << "," << fmt(f.real()) << "," << fmt(f.imag()) << "\n";
            f0re.x.push_back(phi); f0re.y.push_back(f.real());
            f0im.x.push_back(phi); f0im.y.push_back(f.imag());
            if (ref) {
                const cplx g = amplitude_eval(true_amplitude(*ref, cfg.N_f), phi);
                f0re_ref.x.push_back(phi); f0re_ref.y.push_back(g.real());
                f0im_ref.x.push_back(phi); f0im_ref.y.push_back(g.imag());
            }
        }
    }
    std::vector<std::pair<std::string, Series>> dashed;
    if (ref) dashed = {{"Re f0", f0re_ref}, {"Im f0", f0im_ref}};
    write_svg(path("f0.svg"), "scattering amplitude f0(phi)",
              {{"Re f0", f0re}, {"Im f0", f0im}}, dashed);

    double max_neumann_error = 0.0;
    for (int j = 0; j < geom.n(); ++j) {
        Series nre, nim, nre_ref, nim_ref;
        std::ofstream csv(path("neumann_side_" + std::to_string(j) + ".csv"));
        csv << "t,re_un,im_un\n";
        for (int k = 0; k <= 200; ++k) {
            const double t = -1.0 + 2.0 * k / 200.0;
            const cplx v = neumann_trace(rep, j, t);
            csv << fmt(t) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
            nre.x.push_back(t); nre.y.push_back(v.real());
            nim.x.push_back(t); nim.y.push_back(v.imag());
            if (ref) {
                const cplx e = exact_neumann_trace(*ref, geom, j, t);
                nre_ref.x.push_back(t); nre_ref.y.push_back(e.real());
                nim_ref.x.push_back(t); nim_ref.y.push_back(e.imag());
                max_neumann_error = std::max(max_neumann_error, std::abs(v - e));
            }
        }
        std::vector<std::pair<std::string, Series>> d2;
        if (ref) d2 = {{"Re uN", nre_ref}, {"Im uN", nim_ref}};
        write_svg(path("neumann_side_" + std::to_string(j) + ".svg"),
                  "Neumann trace, side " + std::to_string(j), {{"Re uN", nre}, {"Im uN", nim}},
                  d2);
    }

    json rpt;
    rpt["vertices"] = json::array();
    for (cplx v : cfg.vertices) rpt["vertices"].push_back(to_pair(v));
    rpt["beta"] = cfg.beta;
    rpt["M"] = cfg.M;
    rpt["N_f"] = cfg.N_f;
    rpt["M_D"] = cfg.M_D;
    rpt["rows"] = rep.rows;
    rpt["cols"] = rep.cols;
    rpt["residual_norm"] = rep.residual_norm;
    rpt["condition"] = rep.condition;
    rpt["rank_deficient"] = rep.rank_deficient;
    {
        std::vector<double> rr = rep.row_residuals;
        std::sort(rr.begin(), rr.end());
        const auto q = [&](double f) { return rr[size_t(f * (rr.size() - 1))]; };
        rpt["row_residual_quantiles"] = {{"p50", q(0.5)}, {"p90", q(0.9)}, {"max", rr.back()}};
    }
    rpt["timings"] = {{"assemble_seconds", rep.assemble_seconds},
                      {"solve_seconds", rep.solve_seconds}};
    rpt["neumann_coefficients"] = json::array();
    for (const auto& side : rep.neumann.coeff) {
        json row = json::array();
        for (cplx c : side) row.push_back(to_pair(c));
        rpt["neumann_coefficients"].push_back(row);
    }
    rpt["amplitude_coefficients"] = json::array();
    for (cplx a : rep.amplitude.a) rpt["amplitude_coefficients"].push_back(to_pair(a));
    if (ref) {
        double ferr = 0.0;
        const AmplitudeCoefficients aTrue = true_amplitude(*ref, cfg.N_f);
        for (int k = 0; k <= 360; ++k) {
            const double phi = 2 * kPi * k / 360.0;
            ferr = std::max(ferr, std::abs(amplitude_eval(rep.amplitude, phi) -
                                           amplitude_eval(aTrue, phi)));
        }
        rpt["max_f0_error"] = ferr;
        rpt["max_neumann_error"] = max_neumann_error;
    }
    std::ofstream(path("report.json")) << rpt.dump(2) << "\n";

    return rep.rank_deficient ? 4 : 0;
}

} // namespace utscat
