#pragma once

#include "utscat/config.hpp"
#include "utscat/solver.hpp"

#include <string>

namespace utscat {

/// Runs one configured solve end to end and writes report.json, f0.csv,
/// neumann_side_<j>.csv and the SVG figures into cfg.out_dir. Returns the
/// process exit status: 0 ok, 4 rank-deficient solve (artifacts still
/// written, flagged in the report). Config errors (2) and assembly
/// failures (3) surface as exceptions handled by the CLI.
int run_solve(const RunConfig& cfg, int n_threads);

} // namespace utscat
