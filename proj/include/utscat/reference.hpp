#pragma once

#include "utscat/geometry.hpp"
#include "utscat/transforms.hpp"

#include <utility>

namespace utscat {

/// Exact exterior solution u(r, phi) = H_nu^{(1)}(2 i beta r) (A e^{i nu phi} + B e^{-i nu phi}),
/// evaluated through K_nu via H_nu^{(1)}(i x) = (2/pi) (-i)^{nu+1} K_nu(x).
struct HankelSolution {
    int nu = 0;
    cplx A{1.0, 0.0};
    cplx B{0.0, 0.0};
    double beta = 1.0;
};

inline HankelSolution example1(double beta = 1.0) { return {0, 1.0, 0.0, beta}; }
inline HankelSolution example2(double beta = 1.0) { return {1, 1.0, 0.0, beta}; }

struct FieldValue {
    cplx u, ux, uy;
};

/// Value and Cartesian gradient; throws OriginSingularError at z = 0.
FieldValue exact_eval(const HankelSolution& sol, cplx z);

/// Legendre projections (Gauss-Legendre, M_D + 8 nodes) of the Dirichlet
/// trace and of the exact Neumann trace (outward normal derivative times
/// |h_j|) on every side.
std::pair<DirichletData, NeumannCoefficients> traces_on_polygon(const HankelSolution& sol,
                                                                const PolygonGeometry& geom,
                                                                int M_D);

/// Pointwise exact Neumann trace on side j at parameter t.
cplx exact_neumann_trace(const HankelSolution& sol, const PolygonGeometry& geom, int j, double t);

/// The true scattering amplitude modes: a_{+-nu} = (-i)^nu {A, B}.
AmplitudeCoefficients true_amplitude(const HankelSolution& sol, int N_f);

/// |u / [sqrt(1/(pi i beta r)) e^{i(2 i beta r - pi/4)}] - (f0 + f1/r + f2/r^2)|
/// at angle phi; the two correction coefficients are hard-coded for nu = 0, 1.
/// Expected to scale like r^{-3}.
double farfield_expansion_check(const HankelSolution& sol, double r, double phi);

} // namespace utscat
