#include "utscat/config.hpp"
#include "utscat/errors.hpp"
#include "utscat/output.hpp"
#include "utscat/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

utscat::QuadParams quad_from_env() {
    utscat::QuadParams quad;
    if (const char* env = std::getenv("UT_QUAD_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end == env || !(tol > 0.0)) {
            std::fprintf(stderr, "invalid UT_QUAD_TOL value: %s\n", env);
            std::exit(2);
        }
        quad = utscat::QuadParams::from_tolerance(tol);
    }
    return quad;
}

int run_suites(const std::vector<std::string>& names, int threads) {
    const utscat::QuadParams quad = quad_from_env();
    bool all_pass = true;
    std::printf("%-44s %12s %10s  %s\n", "check", "value", "bound", "status");
    for (const auto& name : names) {
        const utscat::SuiteResult suite = utscat::run_verify_suite(name, quad, threads);
        for (const auto& c : suite.checks) {
            std::printf("%-44s %12.3e %10.1e  %s\n", (suite.name + "/" + c.name).c_str(),
                        c.value, c.bound, c.pass() ? "pass" : "FAIL");
            all_pass = all_pass && c.pass();
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unified-transform exterior Dirichlet-to-Neumann solver"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "assembly worker threads")->capture_default_str();

    auto* solve = app.add_subcommand("solve", "run one configured solve");
    std::string config_path;
    std::string out_dir;
    solve->add_option("path", config_path, "JSON config file");
    solve->add_option("--config", config_path, "JSON config file");
    solve->add_option("--out", out_dir, "output directory (overrides config)");

    auto* verify = app.add_subcommand("verify-examples", "run the oracle suites");
    std::string only;
    verify->add_option("--only", only, "run a single suite");

    app.add_subcommand("selftest", "quadrature and special-function suites only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (config_path.empty()) {
                std::fprintf(stderr, "solve: missing config path\n");
                return 2;
            }
            utscat::RunConfig cfg = utscat::load_config(config_path);
            if (const char* env = std::getenv("UT_QUAD_TOL")) {
                char* end = nullptr;
                const double tol = std::strtod(env, &end);
                if (end == env || !(tol > 0.0)) {
                    std::fprintf(stderr, "invalid UT_QUAD_TOL value: %s\n", env);
                    return 2;
                }
                cfg.quad = utscat::QuadParams::from_tolerance(tol);
            }
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            return utscat::run_solve(cfg, threads);
        }
        if (verify->parsed()) {
            std::vector<std::string> names = utscat::verify_suite_names();
            if (!only.empty()) {
                const auto& all = names;
                if (std::find(all.begin(), all.end(), only) == all.end()) {
                    std::fprintf(stderr, "unknown suite: %s\n", only.c_str());
                    return 2;
                }
                names = {only};
            }
            return run_suites(names, threads);
        }
        // selftest
        return run_suites({"specfun", "global-relation", "deformation"}, threads);
    } catch (const utscat::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "assembly error: %s\n", e.what());
        return 3;
    }
}
