#include "utscat/solver.hpp"

#include "utscat/errors.hpp"
#include "utscat/specfun.hpp"
#include "utscat/supplement.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace utscat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroClearance = 0.04; // min distance of lambda to kernel zeros

cplx int_pow(cplx z, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

void validate_plan(const PolygonGeometry& geom, const CollocationPlan& plan) {
    for (const cplx lam : plan.lambdas) {
        if (std::abs(lam) < kZeroClearance)
            throw ConfigError("collocation point too close to lambda = 0");
        for (int j = 0; j < geom.n(); ++j) {
            const cplx pole = geom.on_ray_pole(j);
            if (std::abs(lam - pole) < kZeroClearance || std::abs(lam + pole) < kZeroClearance)
                throw ConfigError("collocation point too close to a kernel zero");
        }
    }
    for (const double t : plan.t0_nodes)
        if (std::abs(t) >= 1.0) throw ConfigError("t0 node outside (-1, 1)");
}

// Runs fn(i) for i in [0, count) over n_threads workers; the work items
// write to disjoint slots, so the only synchronization is the index counter.
void parallel_for(int count, int n_threads, const std::function<void(int)>& fn) {
    if (n_threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

CollocationPlan default_plan(const PolygonGeometry& geom, int M, int N_f) {
    (void)M;
    (void)N_f;
    CollocationPlan plan;
    for (int k = 0; k < 64; ++k)
        plan.lambdas.push_back(std::polar(1.0, 2 * kPi * k / 64 + kPi / 64));
    for (int k = 0; k < 16; ++k)
        plan.lambdas.push_back(std::polar(2.0, 2 * kPi * k / 16 + kPi / 16));
    for (int k = 0; k < 16; ++k)
        plan.lambdas.push_back(std::polar(0.5, 2 * kPi * k / 16 + kPi / 16));
    // Chebyshev points scaled to +-0.98: the trace error of the collocated
    // solution concentrates at the corners, so the node set must reach as
    // close to them as the kernel-decay guard allows.
    for (int k = 0; k < 13; ++k) plan.t0_nodes.push_back(0.98 * std::cos(kPi * k / 12));
    validate_plan(geom, plan);
    return plan;
}

LinearSystem build_system(const PolygonGeometry& geom, const CollocationPlan& plan,
                          const DirichletData& data, int M, int N_f, double beta,
                          const QuadParams& quad, int n_threads) {
    validate_plan(geom, plan);
    const int n = geom.n();
    const int n_c = n * (M + 1);
    const int n_cols = n_c + 2 * N_f + 1;
    const int n_global = static_cast<int>(plan.lambdas.size());
    const int n_limit = n * static_cast<int>(plan.t0_nodes.size());
    const int n_rows = n_global + n_limit;

    LinearSystem sys;
    sys.A = Eigen::MatrixXcd::Zero(n_rows, n_cols);
    sys.b = Eigen::VectorXcd::Zero(n_rows);
    sys.tags.resize(n_rows);
    sys.n_sides = n;
    sys.M = M;
    sys.N_f = N_f;

    parallel_for(n_rows, n_threads, [&](int r) {
        if (r < n_global) {
            const cplx lam = plan.lambdas[r];
            sys.tags[r] = RowTag{RowTag::Global, lam, -1, 0.0};
            for (int j = 0; j < n; ++j) {
                const cplx m = geom.midpoints[j], h = geom.halfsides[j];
                const cplx phase =
                    std::exp(cplx(0, -1) * beta * (lam * m - std::conj(m) / lam));
                const cplx Lambda = beta * (lam * h - std::conj(h) / lam);
                for (int mm = 0; mm <= M; ++mm)
                    sys.A(r, j * (M + 1) + mm) =
                        cplx(0, 1) * phase * legendre_flat_integral(Lambda, mm);
            }
            // sum_j uhat_j + 4 sum_k a_k (-i lam)^{-k} = 0
            const cplx mil = cplx(0, -1) * lam;
            for (int k = -N_f; k <= N_f; ++k) {
                const cplx pw = (k >= 0) ? 1.0 / int_pow(mil, k) : int_pow(mil, -k);
                sys.A(r, n_c + k + N_f) = 4.0 * pw;
            }
            cplx rhs{0.0, 0.0};
            for (int j = 0; j < n; ++j) rhs -= uhat_dirichlet(geom, j, lam, data, beta);
            sys.b(r) = rhs;
        } else {
            const int q = r - n_global;
            const int nt = static_cast<int>(plan.t0_nodes.size());
            const int j0 = q / nt;
            const double t0 = plan.t0_nodes[q % nt];
            sys.tags[r] = RowTag{RowTag::SideLimit, cplx{}, j0, t0};
            const SidePoint z0 = make_side_point(geom, j0, t0);
            const auto row = side_limit_row(geom, z0, M, beta, quad);
            for (int c = 0; c < n_c; ++c) sys.A(r, c) = row[c];
            sys.b(r) = -u_dirichlet_field(geom, z0, data, beta, quad);
        }
        double scale = 0.0;
        for (int c = 0; c < n_cols; ++c) scale = std::max(scale, std::abs(sys.A(r, c)));
        if (!std::isfinite(scale) || !std::isfinite(std::abs(sys.b(r))))
            throw AssemblyNonFiniteError("build_system: non-finite row " + std::to_string(r));
        if (scale > 0.0) {
            for (int c = 0; c < n_cols; ++c) sys.A(r, c) /= scale;
            sys.b(r) /= scale;
        }
    });
    return sys;
}

SolveReport solve_least_squares(const LinearSystem& sys) {
    if (sys.A.rows() < sys.A.cols())
        throw ConfigError("solve_least_squares: system is underdetermined");
    const auto t0 = std::chrono::steady_clock::now();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    const Eigen::VectorXcd x = svd.solve(sys.b);
    const auto t1 = std::chrono::steady_clock::now();

    SolveReport rep;
    const auto& sv = svd.singularValues();
    const double smax = sv(0), smin = sv(sv.size() - 1);
    rep.condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
    rep.rank_deficient = smin < 1e-12 * smax;
    const Eigen::VectorXcd res = sys.A * x - sys.b;
    rep.residual_norm = res.norm();
    rep.row_residuals.resize(res.size());
    for (int r = 0; r < res.size(); ++r) rep.row_residuals[r] = std::abs(res(r));
    rep.rows = static_cast<int>(sys.A.rows());
    rep.cols = static_cast<int>(sys.A.cols());
    rep.solve_seconds = std::chrono::duration<double>(t1 - t0).count();

    rep.neumann = NeumannCoefficients::zeros(sys.n_sides, sys.M);
    for (int j = 0; j < sys.n_sides; ++j)
        for (int m = 0; m <= sys.M; ++m) rep.neumann.coeff[j][m] = x(j * (sys.M + 1) + m);
    rep.amplitude = AmplitudeCoefficients::zeros(sys.N_f);
    const int base = sys.n_sides * (sys.M + 1);
    for (int k = -sys.N_f; k <= sys.N_f; ++k) rep.amplitude.at(k) = x(base + k + sys.N_f);
    return rep;
}

cplx neumann_trace(const SolveReport& report, int j, double t) {
    const auto& c = report.neumann.coeff.at(j);
    const auto P = legendre_all(static_cast<int>(c.size()) - 1, t);
    cplx s{0.0, 0.0};
    for (size_t m = 0; m < c.size(); ++m) s += c[m] * P[m];
    return s;
}

} // namespace utscat
