#pragma once

#include "utscat/contourquad.hpp"
#include "utscat/geometry.hpp"
#include "utscat/transforms.hpp"

#include <vector>

namespace utscat {

/// One boundary-limit kernel integral Q^sigma_{p j}(z0), z0 = m_{j0} + t0 h_{j0}:
///   \int_{ray j} prefac(lam) e^{i beta (lam w - conj(w)/lam)}
///       / (lam h_j - conj(h_j)/lam)^{p+1} d lam / lam,
/// w = m_{j0} - m_j + t0 h_{j0} + sigma h_j, evaluated on the decay-deformed
/// ray with residue corrections. with_prefactor switches in the
/// (lam h_j + conj(h_j)/lam) factor carried by the Dirichlet transform.
struct QKernelRequest {
    const PolygonGeometry* geom = nullptr;
    int p = 0;
    int j = 0;       // source side (transform being integrated)
    int j0 = 0;      // evaluation side
    double t0 = 0.0; // strictly interior: |t0| <= 1 - delta_corner
    int sigma = +1;
    double beta = 1.0;
    bool with_prefactor = false;
};

/// Which deformed ray carries the integral: the bisector of the base ray
/// and the decay-sector center, or the sector center itself. Both come with
/// their residue corrections and agree to quadrature accuracy.
enum class DeformationMode { HalfAngle, FullAngle };

cplx q_integral(const QKernelRequest& req, const QuadParams& quad,
                DeformationMode mode = DeformationMode::HalfAngle);

/// Same integral for an arbitrary field point z (w = z - m_j + sigma h_j);
/// the boundary-limit form above is the z -> z0 on-side specialization.
cplx q_integral_at(const PolygonGeometry& geom, cplx z, int j, int p, int sigma, double beta,
                   bool with_prefactor, const QuadParams& quad,
                   DeformationMode mode = DeformationMode::HalfAngle);

/// Degree-m kernel integral for side j at field point z, with the full
/// Legendre factor recombined:
///   I_{j m}(z) = \int_{ray j} prefac(lam) e^{i beta (lam w0 - conj(w0)/lam)}
///                L_m(Lambda) d lam / lam,
/// w0 = z - m_j, Lambda = beta (lam h_j - conj(h_j)/lam), L_m the flat
/// Legendre transform. Equals sum_p (A_mp Q^+_{p j} + B_mp Q^-_{p j}) /
/// beta^{p+1}, but stays stable at high m: the per-p pieces cancel
/// catastrophically through the small-|Lambda| annulus every contour must
/// cross, so here the entire recombined integrand is used there and the
/// half-wave split is applied only beyond it.
cplx mode_integral(const PolygonGeometry& geom, cplx z, int j, int m, double beta,
                   bool with_prefactor, const QuadParams& quad);

/// The known field u^D(z) = sum_j \int_{ray j} e^{i beta (lam z - conj(z)/lam)}
/// uhat^D_j(lam) d lam / lam, through the Legendre kernel expansion.
cplx u_dirichlet_field(const PolygonGeometry& geom, cplx z, const DirichletData& data, double beta,
                       const QuadParams& quad);
cplx u_dirichlet_field(const PolygonGeometry& geom, const SidePoint& z0, const DirichletData& data,
                       double beta, const QuadParams& quad);

/// The companion Neumann field sum_j \int e^{i beta(...)} uhat^N_j d lam / lam;
/// u^D + u^N vanishes at points enclosed by the polygon when the traces come
/// from a genuine exterior solution.
cplx u_neumann_field(const PolygonGeometry& geom, cplx z, const NeumannCoefficients& c, double beta,
                     const QuadParams& quad);

/// Coefficient vector (over columns c_m^{(j)}, index j (M+1) + m) of one
/// boundary-limit equation at z0; the right-hand side of the equation is
/// -u^D(z0), supplied by the caller. coeff(c_m^{(j)}) = i I_{j m}(z0).
std::vector<cplx> side_limit_row(const PolygonGeometry& geom, const SidePoint& z0, int M,
                                 double beta, const QuadParams& quad);

} // namespace utscat
