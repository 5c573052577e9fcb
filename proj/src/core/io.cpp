#include "core/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace s2m::io {

using nlohmann::json;

std::string fmt(double v) {
    if (v == 0.0) return "0";  // keep negative zero out of serialized output
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string fmt_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    out += "]";
    return out;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

double need_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ParseError(std::string("expected number field \"") + key + "\"");
    return j.at(key).get<double>();
}

int need_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

std::vector<double> need_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("expected array field \"") + key + "\"");
    std::vector<double> out;
    for (const json& x : j.at(key)) {
        if (!x.is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
        out.push_back(x.get<double>());
    }
    return out;
}

}  // namespace

minval::MinProblem problem_from_json(const std::string& text) {
    const json j = parse(text);
    const int n = need_int(j, "n");
    const double b = need_number(j, "b");
    const double cap_c = need_number(j, "C");
    std::vector<double> a = need_array(j, "a");
    try {
        return minval::MinProblem(n, b, cap_c, std::move(a));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string problem_to_json(const minval::MinProblem& p) {
    return "{\"n\":" + std::to_string(p.dim) + ",\"b\":" + fmt(p.b) + ",\"C\":" + fmt(p.cap_c) +
           ",\"a\":" + fmt_array(p.a) + "}";
}

std::string solution_to_json(const minval::MinSolution& sol, minval::Class cls) {
    return "{\"value\":" + fmt(sol.value) + ",\"x\":" + fmt_array(sol.minimizer) +
           ",\"mu\":" + fmt(sol.multiplier) + ",\"method\":\"" + minval::to_string(sol.method) +
           "\",\"class\":\"" + minval::to_string(cls) + "\"}";
}

std::string wellposedness_to_json(const minval::Wellposedness& wp) {
    return "{\"discriminant\":" + fmt(wp.discriminant) + ",\"class\":\"" +
           minval::to_string(wp.cls) + "\"}";
}

std::string fuzz_report_to_json(const minval::FuzzReport& rep) {
    std::string out = "{\"seed\":" + std::to_string(rep.seed) +
                      ",\"trials\":" + std::to_string(rep.trials) +
                      ",\"n_min\":" + std::to_string(rep.n_min) +
                      ",\"n_max\":" + std::to_string(rep.n_max) +
                      ",\"max_value_dev\":" + fmt(rep.max_value_dev) +
                      ",\"max_minimizer_dev\":" + fmt(rep.max_minimizer_dev) +
                      ",\"max_multiplier_dev\":" + fmt(rep.max_multiplier_dev) +
                      ",\"max_constraint_residual\":" + fmt(rep.max_constraint_residual) +
                      ",\"lower_bound_violations\":" + std::to_string(rep.lower_bound_violations) +
                      ",\"uniqueness_violations\":" + std::to_string(rep.uniqueness_violations) +
                      ",\"implication_violations\":" +
                      std::to_string(rep.implication_violations) +
                      ",\"pass\":" + (rep.pass() ? "true" : "false");
    if (rep.worst) {
        out += ",\"worst_trial\":" + std::to_string(rep.worst_trial);
        out += ",\"worst\":" + problem_to_json(*rep.worst);
    }
    out += "}";
    return out;
}

estimate::PointData point_data_from_json(const std::string& text) {
    const json j = parse(text);
    const int n = need_int(j, "n");
    std::vector<double> lambda = need_array(j, "lambda");
    if (static_cast<int>(lambda.size()) != n)
        throw ParseError("\"lambda\" must have n entries");
    std::vector<double> tangent = need_array(j, "tangent");
    std::vector<double> grad = need_array(j, "phi_grad");
    try {
        return estimate::PointData(std::move(lambda), need_number(j, "h111"),
                                   need_number(j, "support"), std::move(tangent),
                                   need_number(j, "phi"), std::move(grad),
                                   need_number(j, "alpha"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string point_data_to_json(const estimate::PointData& pd) {
    return "{\"n\":" + std::to_string(pd.n()) + ",\"lambda\":" + fmt_array(pd.lam().values()) +
           ",\"h111\":" + fmt(pd.h111()) + ",\"support\":" + fmt(pd.support()) +
           ",\"tangent\":" + fmt_array(pd.tangent()) + ",\"phi\":" + fmt(pd.varphi()) +
           ",\"phi_grad\":" + fmt_array(pd.varphi_grad()) + ",\"alpha\":" + fmt(pd.alpha()) + "}";
}

geomkit::SurfaceSpec surface_spec_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("expected string field \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ellipsoid") {
        geomkit::EllipsoidSpec spec;
        const std::vector<double> axes = need_array(j, "axes");
        if (axes.size() != 3) throw ParseError("\"axes\" must have 3 entries");
        for (int i = 0; i < 3; ++i) {
            if (!(axes[static_cast<std::size_t>(i)] > 0.0))
                throw ParseError("\"axes\" must be positive");
            spec.axes[static_cast<std::size_t>(i)] = axes[static_cast<std::size_t>(i)];
        }
        if (j.contains("n_theta")) spec.n_theta = need_int(j, "n_theta");
        if (j.contains("n_phi")) spec.n_phi = need_int(j, "n_phi");
        if (spec.n_theta < 2 || spec.n_phi < 4) throw ParseError("ellipsoid grid too coarse");
        return spec;
    }
    if (kind == "radial_grid") {
        const int nt = need_int(j, "n_theta");
        const int np = need_int(j, "n_phi");
        if (!j.contains("rho") || !j.at("rho").is_array())
            throw ParseError("expected array field \"rho\"");
        std::vector<double> rho;
        rho.reserve(static_cast<std::size_t>(nt) * static_cast<std::size_t>(std::max(np, 0)));
        for (const json& row : j.at("rho")) {
            if (!row.is_array()) throw ParseError("\"rho\" must be an array of rows");
            for (const json& x : row) {
                if (!x.is_number()) throw ParseError("non-numeric entry in \"rho\"");
                rho.push_back(x.get<double>());
            }
        }
        try {
            return geomkit::RadialGrid(nt, np, std::move(rho));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown surface kind \"" + kind + "\"");
}

std::string surface_report_to_json(const geomkit::SurfaceReport& rep) {
    return "{\"n_samples\":" + std::to_string(rep.n_samples) + ",\"delta\":" + fmt(rep.delta) +
           ",\"sup_kappa\":" + fmt(rep.sup_kappa) + ",\"min_sigma2\":" + fmt(rep.min_sigma2) +
           ",\"min_support\":" + fmt(rep.min_support) +
           ",\"two_convex\":" + (rep.two_convex ? "true" : "false") + "}";
}

std::string samples_to_csv(const std::vector<geomkit::SurfaceSample>& samples, double alpha) {
    std::string out =
        "theta,phi,X1,X2,X3,N1,N2,N3,kappa1,kappa2,support,sigma2,phi_value\n";
    for (const geomkit::SurfaceSample& s : samples) {
        const double sigma2 = s.kappa1 * s.kappa2;
        out += fmt(s.theta) + "," + fmt(s.phi) + "," + fmt(s.position(0)) + "," +
               fmt(s.position(1)) + "," + fmt(s.position(2)) + "," + fmt(s.normal(0)) + "," +
               fmt(s.normal(1)) + "," + fmt(s.normal(2)) + "," + fmt(s.kappa1) + "," +
               fmt(s.kappa2) + "," + fmt(s.support) + "," + fmt(sigma2) + "," +
               fmt(sigma2 / std::pow(s.support, alpha)) + "\n";
    }
    return out;
}

}  // namespace s2m::io
