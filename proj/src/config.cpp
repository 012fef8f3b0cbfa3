#include "utscat/config.hpp"

#include "utscat/errors.hpp"
#include "utscat/reference.hpp"
#include "utscat/specfun.hpp"

#include <json.hpp>

#include <Eigen/Dense>

#include <fstream>

namespace utscat {

namespace {

using nlohmann::json;

cplx read_cplx(const json& v, const char* where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(std::string(where) + ": complex values are [re, im] pairs");
    return {v[0].get<double>(), v[1].get<double>()};
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    RunConfig cfg;
    if (!j.contains("vertices")) throw ConfigError("config requires 'vertices'");
    for (const auto& v : j.at("vertices")) cfg.vertices.push_back(read_cplx(v, "vertices"));
    if (cfg.vertices.size() < 3) throw ConfigError("at least 3 vertices required");

    cfg.beta = get_or(j, "beta", 1.0);
    if (!(cfg.beta > 0.0)) throw ConfigError("beta must be positive");
    cfg.M = get_or(j, "M", 8);
    cfg.N_f = get_or(j, "N_f", 8);
    cfg.M_D = get_or(j, "M_D", cfg.M + 4);
    if (cfg.M < 0 || cfg.N_f < 0 || cfg.M_D < 0) throw ConfigError("orders must be >= 0");

    if (j.contains("collocation")) {
        const auto& c = j.at("collocation");
        cfg.lambda_unit_count = get_or(c, "unit_circle_points", cfg.lambda_unit_count);
        cfg.lambda_circle_count = get_or(c, "auxiliary_circle_points", cfg.lambda_circle_count);
        cfg.circle_radii = get_or(c, "auxiliary_radii", cfg.circle_radii);
        cfg.t0_per_side = get_or(c, "t0_per_side", cfg.t0_per_side);
        if (cfg.lambda_unit_count < 1 || cfg.lambda_circle_count < 1 || cfg.t0_per_side < 2)
            throw ConfigError("collocation counts must be >= 1");
    }
    if (j.contains("quadrature")) {
        const auto& q = j.at("quadrature");
        cfg.quad.step = get_or(q, "step", cfg.quad.step);
        cfg.quad.half_width = get_or(q, "half_width", cfg.quad.half_width);
        cfg.quad.tolerance = get_or(q, "tolerance", cfg.quad.tolerance);
        cfg.indent_eps = get_or(q, "indent_eps", cfg.indent_eps);
        cfg.quad.residue_radius = get_or(q, "residue_radius", cfg.quad.residue_radius);
        cfg.quad.residue_points = get_or(q, "residue_points", cfg.quad.residue_points);
        if (!(cfg.quad.tolerance > 0.0) || cfg.quad.tolerance > 1e-2)
            throw ConfigError("quadrature tolerance must lie in (0, 1e-2]");
        if (!(cfg.quad.step > 0.0) || !(cfg.quad.half_width > 0.0))
            throw ConfigError("quadrature step and half_width must be positive");
    }

    if (j.contains("data")) {
        const auto& d = j.at("data");
        if (d.contains("example")) {
            cfg.example = d.at("example").get<int>();
            if (cfg.example != 1 && cfg.example != 2)
                throw ConfigError("data.example must be 1 or 2");
        } else if (d.contains("dirichlet")) {
            for (const auto& side : d.at("dirichlet")) {
                std::vector<cplx> vals;
                for (const auto& v : side) vals.push_back(read_cplx(v, "data.dirichlet"));
                if (vals.size() < 2) throw ConfigError("need >= 2 samples per side");
                cfg.dirichlet_samples.push_back(std::move(vals));
            }
            if (cfg.dirichlet_samples.size() != cfg.vertices.size())
                throw ConfigError("data.dirichlet needs one sample list per side");
        } else {
            throw ConfigError("data requires 'example' or 'dirichlet'");
        }
    } else {
        throw ConfigError("config requires 'data'");
    }

    cfg.out_dir = get_or(j, "out_dir", std::string("."));
    return cfg;
}

DirichletData config_dirichlet(const RunConfig& cfg, const PolygonGeometry& geom) {
    if (cfg.example != 0) {
        const HankelSolution sol =
            (cfg.example == 1) ? example1(cfg.beta) : example2(cfg.beta);
        return traces_on_polygon(sol, geom, cfg.M_D).first;
    }
    DirichletData d;
    d.coeff.assign(geom.n(), std::vector<cplx>(cfg.M_D + 1, cplx{}));
    for (int j = 0; j < geom.n(); ++j) {
        const auto& vals = cfg.dirichlet_samples[j];
        const int ns = static_cast<int>(vals.size());
        const int nm = std::min(cfg.M_D + 1, ns);
        Eigen::MatrixXd V(ns, nm);
        Eigen::VectorXcd y(ns);
        for (int s = 0; s < ns; ++s) {
            const double t = (ns == 1) ? 0.0 : -1.0 + 2.0 * s / (ns - 1);
            const auto P = legendre_all(nm - 1, t);
            for (int m = 0; m < nm; ++m) V(s, m) = P[m];
            y(s) = vals[s];
        }
        const Eigen::VectorXcd c =
            Eigen::MatrixXcd(V.cast<cplx>()).colPivHouseholderQr().solve(y);
        for (int m = 0; m < nm; ++m) d.coeff[j][m] = c(m);
    }
    return d;
}

} // namespace utscat
