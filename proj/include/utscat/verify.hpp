#pragma once

#include "utscat/contourquad.hpp"
#include "utscat/geometry.hpp"
#include "utscat/reference.hpp"
#include "utscat/transforms.hpp"

#include <string>
#include <vector>

namespace utscat {

/// One named bound check: pass iff value <= bound.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass() const { return value <= bound; }
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool pass() const;
};

/// Suites, in run order: "specfun", "global-relation", "deformation",
/// "side-limit", "examples". "selftest" maps to the first three.
std::vector<std::string> verify_suite_names();

SuiteResult run_verify_suite(const std::string& name, const QuadParams& quad, int n_threads = 1);

/// The unit square of the worked example: vertices 1+i, -1+i, -1-i, 1-i.
PolygonGeometry example_square();

/// Traces of the interior manufactured solution e^{2 beta x} on the polygon,
/// in the same normal convention as the exterior traces; used by the
/// interior global-relation oracle.
std::pair<DirichletData, NeumannCoefficients> manufactured_interior_traces(
    const PolygonGeometry& geom, double beta, int M);

} // namespace utscat
