#pragma once

#include "utscat/contourquad.hpp"
#include "utscat/geometry.hpp"
#include "utscat/transforms.hpp"

#include <string>
#include <vector>

namespace utscat {

/// One solve run, as described by a JSON config file. Complex numbers are
/// [re, im] pairs. Data source: either "example": 1|2 or "dirichlet":
/// per-side lists of sampled values at equispaced t in [-1, 1].
struct RunConfig {
    std::vector<cplx> vertices;
    double beta = 1.0;
    int M = 8;
    int N_f = 8;
    int M_D = 12;

    int lambda_unit_count = 64;
    std::vector<double> circle_radii{2.0, 0.5};
    int lambda_circle_count = 16;
    int t0_per_side = 13;

    QuadParams quad;
    double indent_eps = 0.3;

    int example = 0; // 0: sampled data below
    std::vector<std::vector<cplx>> dirichlet_samples;

    std::string out_dir = ".";
};

/// Parses and validates; throws ConfigError on unreadable files, schema
/// violations or out-of-range values.
RunConfig load_config(const std::string& path);

/// Legendre coefficients (M_D modes) of the configured Dirichlet data;
/// sampled data is least-squares fitted per side.
DirichletData config_dirichlet(const RunConfig& cfg, const PolygonGeometry& geom);

} // namespace utscat
