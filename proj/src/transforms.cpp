#include "utscat/transforms.hpp"
#include "utscat/errors.hpp"
#include "utscat/specfun.hpp"

#include <cmath>

namespace utscat {

namespace {

cplx side_phase(const PolygonGeometry& geom, int j, cplx lam, double beta) {
    const cplx m = geom.midpoints[j];
    return std::exp(cplx(0, -1) * beta * (lam * m - std::conj(m) / lam));
}

cplx side_lambda_arg(const PolygonGeometry& geom, int j, cplx lam, double beta) {
    const cplx h = geom.halfsides[j];
    return beta * (lam * h - std::conj(h) / lam);
}

cplx int_pow(cplx z, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

} // namespace

cplx uhat_dirichlet(const PolygonGeometry& geom, int j, cplx lam, const DirichletData& data,
                    double beta) {
    if (lam == cplx{}) throw NonPositiveArgumentError("uhat_dirichlet: lambda = 0");
    const cplx h = geom.halfsides[j];
    const cplx Lambda = side_lambda_arg(geom, j, lam, beta);
    cplx sum{0.0, 0.0};
    for (std::size_t m = 0; m < data.coeff[j].size(); ++m)
        sum += data.coeff[j][m] * legendre_flat_integral(Lambda, static_cast<int>(m));
    return cplx(0, 1) * beta * (std::conj(h) / lam + lam * h) * side_phase(geom, j, lam, beta) *
           sum;
}

cplx uhat_neumann(const PolygonGeometry& geom, int j, cplx lam, const NeumannCoefficients& c,
                  double beta) {
    if (lam == cplx{}) throw NonPositiveArgumentError("uhat_neumann: lambda = 0");
    const cplx Lambda = side_lambda_arg(geom, j, lam, beta);
    cplx sum{0.0, 0.0};
    for (std::size_t m = 0; m < c.coeff[j].size(); ++m)
        sum += c.coeff[j][m] * legendre_flat_integral(Lambda, static_cast<int>(m));
    return cplx(0, 1) * side_phase(geom, j, lam, beta) * sum;
}

cplx amplitude_eval(const AmplitudeCoefficients& a, cplx phi) {
    cplx sum{0.0, 0.0};
    for (int k = -a.N_f; k <= a.N_f; ++k)
        sum += a.at(k) * std::exp(cplx(0, 1) * double(k) * phi);
    return sum;
}

cplx I_of_lambda(const AmplitudeCoefficients& a, cplx lam) {
    if (lam == cplx{}) throw NonPositiveArgumentError("I_of_lambda: lambda = 0");
    const cplx w = cplx(0, -1) * lam; // -i lam
    cplx sum{0.0, 0.0};
    for (int k = -a.N_f; k <= a.N_f; ++k) {
        const cplx pw = k >= 0 ? 1.0 / int_pow(w, k) : int_pow(w, -k);
        sum += a.at(k) * pw;
    }
    return -4.0 * sum;
}

cplx global_residual(const PolygonGeometry& geom, cplx lam, const NeumannCoefficients& c,
                     const AmplitudeCoefficients& a, const DirichletData& data, double beta,
                     bool interior) {
    cplx sum{0.0, 0.0};
    for (int j = 0; j < geom.n(); ++j)
        sum += uhat_dirichlet(geom, j, lam, data, beta) + uhat_neumann(geom, j, lam, c, beta);
    if (!interior) sum -= I_of_lambda(a, lam);
    return sum;
}

} // namespace utscat
