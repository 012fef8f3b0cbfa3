#pragma once

#include "utscat/contourquad.hpp"
#include "utscat/geometry.hpp"
#include "utscat/transforms.hpp"

#include <Eigen/Dense>

#include <vector>

namespace utscat {

/// Collocation layout: lambda points for global-relation rows plus interior
/// t0 nodes (shared by every side) for the boundary-limit rows.
struct CollocationPlan {
    std::vector<cplx> lambdas;
    std::vector<double> t0_nodes;
};

/// 64 unit-circle points (offset pi/64, clear of the kernel zeros at
/// +-1, +-i of the square and of any convex polygon's +-e^{-i arg h_j}
/// by construction check), 16 points each on the circles of radius 2 and
/// 1/2, and 13 Chebyshev t0 nodes scaled by 0.98 (corner-clustered: the
/// collocated solution's trace error concentrates at t = +-1).
CollocationPlan default_plan(const PolygonGeometry& geom, int M, int N_f);

/// Where a row came from; carried through for per-row diagnostics.
struct RowTag {
    enum Kind { Global, SideLimit } kind = Global;
    cplx lambda;    // Global rows
    int j0 = -1;    // SideLimit rows
    double t0 = 0.0;
};

/// Dense overdetermined system over the unknowns
/// (c_m^{(j)} : column j (M+1) + m) ++ (a_k : column n (M+1) + k + N_f),
/// every row scaled by the sup-norm of its coefficients.
struct LinearSystem {
    Eigen::MatrixXcd A;
    Eigen::VectorXcd b;
    std::vector<RowTag> tags;
    int n_sides = 0, M = 0, N_f = 0;
};

LinearSystem build_system(const PolygonGeometry& geom, const CollocationPlan& plan,
                          const DirichletData& data, int M, int N_f, double beta,
                          const QuadParams& quad, int n_threads = 1);

struct SolveReport {
    NeumannCoefficients neumann;
    AmplitudeCoefficients amplitude;
    double residual_norm = 0.0;
    double condition = 0.0;
    bool rank_deficient = false;
    std::vector<double> row_residuals;
    double assemble_seconds = 0.0;
    double solve_seconds = 0.0;
    int rows = 0, cols = 0;
};

/// Least-squares solve by singular value decomposition; minimum-norm
/// solution and a raised flag when the spectrum drops below 1e-12 of the
/// largest singular value.
SolveReport solve_least_squares(const LinearSystem& sys);

/// sum_m c_m^{(j)} P_m(t).
cplx neumann_trace(const SolveReport& report, int j, double t);

} // namespace utscat
