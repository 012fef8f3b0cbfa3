#pragma once

#include "utscat/geometry.hpp"

#include <complex>
#include <vector>

namespace utscat {

/// Legendre coefficients of the Dirichlet trace, one vector per side
/// (u on side j at z = m_j + t h_j is approximately sum_m coeff[j][m] P_m(t)).
struct DirichletData {
    std::vector<std::vector<cplx>> coeff;
    int sides() const { return static_cast<int>(coeff.size()); }
    int order() const { return coeff.empty() ? -1 : static_cast<int>(coeff[0].size()) - 1; }
};

/// Legendre coefficients of the Neumann trace (outward normal derivative
/// times |h_j|), same layout.
struct NeumannCoefficients {
    std::vector<std::vector<cplx>> coeff;
    int sides() const { return static_cast<int>(coeff.size()); }
    int order() const { return coeff.empty() ? -1 : static_cast<int>(coeff[0].size()) - 1; }

    static NeumannCoefficients zeros(int n_sides, int M) {
        return NeumannCoefficients{
            std::vector<std::vector<cplx>>(n_sides, std::vector<cplx>(M + 1, cplx{}))};
    }
};

/// Truncated Fourier modes of the scattering amplitude:
/// f0(phi) = sum_{k=-N_f}^{N_f} a[k + N_f] e^{i k phi}.
struct AmplitudeCoefficients {
    int N_f = 0;
    std::vector<cplx> a; // length 2 N_f + 1

    static AmplitudeCoefficients zeros(int N_f) {
        return AmplitudeCoefficients{N_f, std::vector<cplx>(2 * N_f + 1, cplx{})};
    }
    cplx& at(int k) { return a[k + N_f]; }
    cplx at(int k) const { return a[k + N_f]; }
};

/// Dirichlet part of the side transform:
///   i beta (conj(h_j)/lam + lam h_j) e^{-i beta (lam m_j - conj(m_j)/lam)}
///     * sum_m d_m \int e^{-i Lambda t} P_m(t) dt,  Lambda = beta (lam h_j - conj(h_j)/lam).
cplx uhat_dirichlet(const PolygonGeometry& geom, int j, cplx lam, const DirichletData& data,
                    double beta);

/// Neumann part: i e^{-i beta (lam m_j - conj(m_j)/lam)} sum_m c_m \int e^{-i Lambda t} P_m dt.
cplx uhat_neumann(const PolygonGeometry& geom, int j, cplx lam, const NeumannCoefficients& c,
                  double beta);

cplx amplitude_eval(const AmplitudeCoefficients& a, cplx phi);

/// The far-field term of the exterior global relation in branch-free
/// Laurent form: -4 f0(i ln(-i lam)) = -4 sum_k a_k (-i lam)^{-k}, the
/// constant fixed against the exact-solution family (sum_j uhat_j equals
/// this identically for the Hankel solutions).
cplx I_of_lambda(const AmplitudeCoefficients& a, cplx lam);

/// Residual of the global relation at lam: sum_j (uhat_D + uhat_N) - I(lam);
/// the interior variant drops the far-field term.
cplx global_residual(const PolygonGeometry& geom, cplx lam, const NeumannCoefficients& c,
                     const AmplitudeCoefficients& a, const DirichletData& data, double beta,
                     bool interior = false);

} // namespace utscat
