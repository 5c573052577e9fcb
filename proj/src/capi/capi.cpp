#include "sigma2min/sigma2min.h"

#include "core/estimate.hpp"
#include "core/geomkit.hpp"
#include "core/io.hpp"
#include "core/minval.hpp"
#include "core/suites.hpp"
#include "core/symfun.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// every entry point funnels through here so exceptions map to stable codes
template <typename Fn>
s2m_status guarded(Fn&& fn) {
    try {
        fn();
        return S2M_OK;
    } catch (const s2m::minval::NotWellPosed& e) {
        set_error(e.what());
        return S2M_ERR_NOT_WELL_POSED;
    } catch (const s2m::geomkit::NotTwoConvex& e) {
        set_error(e.what());
        return S2M_ERR_NOT_TWO_CONVEX;
    } catch (const s2m::geomkit::GridError& e) {
        set_error(e.what());
        return S2M_ERR_GRID;
    } catch (const s2m::io::ParseError& e) {
        set_error(e.what());
        return S2M_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return S2M_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return S2M_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return S2M_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return S2M_ERR_INTERNAL;
    }
}

s2m_status require(bool ok, const char* msg) {
    if (ok) return S2M_OK;
    set_error(msg);
    return S2M_ERR_INVALID_ARGUMENT;
}

s2m::symfun::LambdaVec make_lambda(const double* lam, int n) {
    if (lam == nullptr) throw std::invalid_argument("lam must not be null");
    return s2m::symfun::LambdaVec(std::vector<double>(lam, lam + n));
}

s2m::symfun::IndexSet make_index_set(const int* excl, int n_excl) {
    if (n_excl == 0) return {};
    if (excl == nullptr) throw std::invalid_argument("excl must not be null");
    if (n_excl == 1) return s2m::symfun::IndexSet(excl[0]);
    if (n_excl == 2) return {excl[0], excl[1]};
    throw std::invalid_argument("at most two indices can be excluded");
}

s2m_class to_c(s2m::minval::Class c) {
    switch (c) {
        case s2m::minval::Class::WellPosed: return S2M_WELL_POSED;
        case s2m::minval::Class::DegenerateBounded: return S2M_DEGENERATE_BOUNDED;
        case s2m::minval::Class::DegenerateUnbounded: return S2M_DEGENERATE_UNBOUNDED;
        case s2m::minval::Class::Unbounded: return S2M_UNBOUNDED;
    }
    return S2M_UNBOUNDED;
}

}  // namespace

struct s2m_problem {
    s2m::minval::MinProblem p;
};

struct s2m_solution {
    s2m::minval::MinSolution s;
};

struct s2m_point_data {
    s2m::estimate::PointData pd;
};

struct s2m_surface {
    s2m::geomkit::SurfaceSpec spec;
    std::vector<s2m::geomkit::SurfaceSample> samples;
};

extern "C" {

const char* s2m_version(void) { return "0.1.0"; }

const char* s2m_last_error(void) { return g_last_error.c_str(); }

void s2m_string_free(char* s) { delete[] s; }

/* ---- symfun ---- */

s2m_status s2m_sigma(int k, const double* lam, int n, double* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = s2m::symfun::sigma(k, make_lambda(lam, n)); });
}

s2m_status s2m_sigma_del(int k, const double* lam, int n, const int* excl, int n_excl,
                         double* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded(
        [&] { *out = s2m::symfun::sigma_del(k, make_lambda(lam, n), make_index_set(excl, n_excl)); });
}

s2m_status s2m_sigma_grad(int m, const double* lam, int n, double* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] {
        const std::vector<double> g = s2m::symfun::sigma_grad(m, make_lambda(lam, n));
        std::memcpy(out, g.data(), g.size() * sizeof(double));
    });
}

s2m_status s2m_sigma2_hessian_quadform(const double* v, int n, double* out) {
    if (s2m_status st = require(v != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
        *out = s2m::symfun::sigma2_hessian_quadform(m);
    });
}

s2m_status s2m_in_gamma_k(const double* lam, int n, int k, int* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = s2m::symfun::in_gamma_k(make_lambda(lam, n), k) ? 1 : 0; });
}

/* ---- minval ---- */

s2m_status s2m_problem_create(int n, double b, double cap_c, const double* a, s2m_problem** out) {
    if (s2m_status st = require(a != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        *out = new s2m_problem{s2m::minval::MinProblem(n, b, cap_c, std::vector<double>(a, a + n))};
    });
}

s2m_status s2m_problem_from_json(const char* json, s2m_problem** out) {
    if (s2m_status st = require(json != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new s2m_problem{s2m::io::problem_from_json(json)}; });
}

void s2m_problem_free(s2m_problem* p) { delete p; }

int s2m_problem_dim(const s2m_problem* p) { return p ? p->p.dim : 0; }

s2m_status s2m_problem_to_json(const s2m_problem* p, char** json) {
    if (s2m_status st = require(p != nullptr && json != nullptr, "null argument")) return st;
    return guarded([&] { *json = dup_string(s2m::io::problem_to_json(p->p)); });
}

s2m_status s2m_check_conditions(const s2m_problem* p, double* discriminant, s2m_class* cls) {
    if (s2m_status st = require(p != nullptr, "problem must not be null")) return st;
    return guarded([&] {
        const s2m::minval::Wellposedness wp = s2m::minval::check_conditions(p->p);
        if (discriminant) *discriminant = wp.discriminant;
        if (cls) *cls = to_c(wp.cls);
    });
}

s2m_status s2m_evaluate_f(const s2m_problem* p, const double* x, int n, double* out) {
    if (s2m_status st = require(p != nullptr && x != nullptr && out != nullptr, "null argument"))
        return st;
    return guarded([&] {
        *out = s2m::minval::evaluate_f(p->p, std::span<const double>(x, static_cast<std::size_t>(n)));
    });
}

s2m_status s2m_min_value_closed_form(const s2m_problem* p, double* out) {
    if (s2m_status st = require(p != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = s2m::minval::min_value_closed_form(p->p); });
}

s2m_status s2m_solve(const s2m_problem* p, s2m_method method, s2m_solution** out) {
    if (s2m_status st = require(p != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        s2m::minval::MinSolution sol;
        switch (method) {
            case S2M_METHOD_EIGEN: sol = s2m::minval::solve_eigendecomp(p->p); break;
            case S2M_METHOD_LAGRANGE: sol = s2m::minval::solve_lagrange(p->p); break;
            case S2M_METHOD_ORACLE: {
                const s2m::minval::OracleOutcome oo = s2m::minval::oracle_minimize(p->p);
                if (!oo.solution)
                    throw s2m::minval::NotWellPosed(s2m::minval::check_conditions(p->p));
                sol = *oo.solution;
                break;
            }
            default: throw std::invalid_argument("unknown method");
        }
        *out = new s2m_solution{std::move(sol)};
    });
}

void s2m_solution_free(s2m_solution* s) { delete s; }

double s2m_solution_value(const s2m_solution* s) {
    return s ? s->s.value : std::numeric_limits<double>::quiet_NaN();
}

double s2m_solution_multiplier(const s2m_solution* s) {
    return s ? s->s.multiplier : std::numeric_limits<double>::quiet_NaN();
}

s2m_method s2m_solution_method(const s2m_solution* s) {
    if (!s) return S2M_METHOD_LAGRANGE;
    switch (s->s.method) {
        case s2m::minval::Method::EigenDecomp: return S2M_METHOD_EIGEN;
        case s2m::minval::Method::Lagrange: return S2M_METHOD_LAGRANGE;
        case s2m::minval::Method::Oracle: return S2M_METHOD_ORACLE;
    }
    return S2M_METHOD_LAGRANGE;
}

int s2m_solution_dim(const s2m_solution* s) {
    return s ? static_cast<int>(s->s.minimizer.size()) : 0;
}

s2m_status s2m_solution_minimizer(const s2m_solution* s, double* out) {
    if (s2m_status st = require(s != nullptr && out != nullptr, "null argument")) return st;
    std::memcpy(out, s->s.minimizer.data(), s->s.minimizer.size() * sizeof(double));
    return S2M_OK;
}

s2m_status s2m_solution_to_json(const s2m_solution* s, char** json) {
    if (s2m_status st = require(s != nullptr && json != nullptr, "null argument")) return st;
    return guarded(
        [&] { *json = dup_string(s2m::io::solution_to_json(s->s, s2m::minval::Class::WellPosed)); });
}

/* ---- verification ---- */

s2m_status s2m_verify_run(unsigned long long seed, long long trials, int n_min, int n_max,
                          s2m_verify_summary* out, char** report_json) {
    return guarded([&] {
        s2m::minval::FuzzOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.n_min = n_min;
        opt.n_max = n_max;
        const s2m::minval::FuzzReport rep = s2m::minval::fuzz_compare(opt);
        if (out) {
            out->seed = rep.seed;
            out->trials = rep.trials;
            out->n_min = rep.n_min;
            out->n_max = rep.n_max;
            out->max_value_dev = rep.max_value_dev;
            out->max_minimizer_dev = rep.max_minimizer_dev;
            out->max_multiplier_dev = rep.max_multiplier_dev;
            out->max_constraint_residual = rep.max_constraint_residual;
            out->lower_bound_violations = rep.lower_bound_violations;
            out->uniqueness_violations = rep.uniqueness_violations;
            out->pass = rep.pass() ? 1 : 0;
        }
        if (report_json) *report_json = dup_string(s2m::io::fuzz_report_to_json(rep));
    });
}

s2m_status s2m_symcheck_run(unsigned long long seed, long long trials, int* pass,
                            char** report_json) {
    return guarded([&] {
        const s2m::suites::SymcheckReport rep =
            s2m::suites::run_symcheck({seed, trials});
        if (pass) *pass = rep.pass() ? 1 : 0;
        if (report_json) *report_json = dup_string(s2m::suites::symcheck_report_to_json(rep));
    });
}

/* ---- estimate ---- */

s2m_status s2m_point_data_create(int n, const double* lambda, double h111, double support,
                                 const double* tangent, double varphi, const double* varphi_grad,
                                 double alpha, s2m_point_data** out) {
    if (s2m_status st = require(lambda != nullptr && tangent != nullptr &&
                                    varphi_grad != nullptr && out != nullptr,
                                "null argument"))
        return st;
    return guarded([&] {
        *out = new s2m_point_data{s2m::estimate::PointData(
            std::vector<double>(lambda, lambda + n), h111, support,
            std::vector<double>(tangent, tangent + n), varphi,
            std::vector<double>(varphi_grad, varphi_grad + n), alpha)};
    });
}

s2m_status s2m_point_data_from_json(const char* json, s2m_point_data** out) {
    if (s2m_status st = require(json != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new s2m_point_data{s2m::io::point_data_from_json(json)}; });
}

void s2m_point_data_free(s2m_point_data* pd) { delete pd; }

s2m_status s2m_build_point_problem(const s2m_point_data* pd, s2m_problem** out) {
    if (s2m_status st = require(pd != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new s2m_problem{s2m::estimate::build_point_problem(pd->pd)}; });
}

s2m_status s2m_identity_checks(const double* lam, int n, double* r1, double* r2) {
    if (s2m_status st = require(r1 != nullptr && r2 != nullptr, "null argument")) return st;
    return guarded([&] {
        const auto [a, b] = s2m::estimate::identity_checks(make_lambda(lam, n));
        *r1 = a;
        *r2 = b;
    });
}

s2m_status s2m_coeff_identity_residual(const double* lam, int n, double alpha, double* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded(
        [&] { *out = s2m::estimate::coeff_identity_residual(make_lambda(lam, n), alpha); });
}

s2m_status s2m_sigma2_point_minimum(const s2m_point_data* pd, double* out) {
    if (s2m_status st = require(pd != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] { *out = s2m::estimate::sigma2_point_minimum(pd->pd); });
}

s2m_status s2m_remark42_bound(const double* lam, int n, double b, double cap_c, double* out) {
    if (s2m_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = s2m::estimate::remark42_bound(make_lambda(lam, n), b, cap_c); });
}

s2m_status s2m_final_bound(const s2m_point_data* pd, double delta, double b1, double b0,
                           double* lead, double* h_bound) {
    if (s2m_status st = require(pd != nullptr, "point data must not be null")) return st;
    return guarded([&] {
        const s2m::estimate::QuadBound qb = s2m::estimate::final_bound(pd->pd, delta, b1, b0);
        if (lead) *lead = qb.lead;
        if (h_bound) *h_bound = qb.h_bound;
    });
}

s2m_status s2m_explore_k(const double* lam, int n, int k, double b, double cap_c, s2m_class* cls,
                         double* value, double* minimizer) {
    return guarded([&] {
        const s2m::estimate::Exploration ex =
            s2m::estimate::explore_k(make_lambda(lam, n), k, b, cap_c);
        if (cls) *cls = to_c(ex.cls);
        if (value) *value = ex.value ? *ex.value : std::numeric_limits<double>::quiet_NaN();
        if (minimizer && ex.minimizer)
            std::memcpy(minimizer, ex.minimizer->data(), ex.minimizer->size() * sizeof(double));
    });
}

s2m_status s2m_explore_csv(int n, int k, unsigned long long seed, long long trials, char** csv) {
    if (s2m_status st = require(csv != nullptr, "csv must not be null")) return st;
    return guarded([&] {
        s2m::suites::ExploreOptions opt;
        opt.n = n;
        opt.k = k;
        opt.seed = seed;
        opt.trials = trials;
        *csv = dup_string(s2m::suites::run_explore_csv(opt));
    });
}

/* ---- geomkit ---- */

s2m_status s2m_surface_ellipsoid(const double axes[3], int n_theta, int n_phi, s2m_surface** out) {
    if (s2m_status st = require(axes != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        s2m::geomkit::EllipsoidSpec spec;
        spec.axes = {axes[0], axes[1], axes[2]};
        spec.n_theta = n_theta;
        spec.n_phi = n_phi;
        auto samples = s2m::geomkit::samples_for(spec);
        *out = new s2m_surface{std::move(spec), std::move(samples)};
    });
}

s2m_status s2m_surface_radial_grid(int n_theta, int n_phi, const double* rho, s2m_surface** out) {
    if (s2m_status st = require(rho != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        s2m::geomkit::RadialGrid grid(
            n_theta, n_phi,
            std::vector<double>(rho, rho + static_cast<std::size_t>(n_theta) * n_phi));
        auto samples = s2m::geomkit::radial_grid_samples(grid);
        *out = new s2m_surface{std::move(grid), std::move(samples)};
    });
}

s2m_status s2m_surface_from_json(const char* json, s2m_surface** out) {
    if (s2m_status st = require(json != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        s2m::geomkit::SurfaceSpec spec = s2m::io::surface_spec_from_json(json);
        auto samples = s2m::geomkit::samples_for(spec);
        *out = new s2m_surface{std::move(spec), std::move(samples)};
    });
}

void s2m_surface_free(s2m_surface* s) { delete s; }

long long s2m_surface_sample_count(const s2m_surface* s) {
    return s ? static_cast<long long>(s->samples.size()) : 0;
}

s2m_status s2m_surface_samples(const s2m_surface* s, s2m_sample* out) {
    if (s2m_status st = require(s != nullptr && out != nullptr, "null argument")) return st;
    for (std::size_t i = 0; i < s->samples.size(); ++i) {
        const s2m::geomkit::SurfaceSample& in = s->samples[i];
        out[i].theta = in.theta;
        out[i].phi = in.phi;
        for (int d = 0; d < 3; ++d) {
            out[i].position[d] = in.position(d);
            out[i].normal[d] = in.normal(d);
        }
        out[i].kappa1 = in.kappa1;
        out[i].kappa2 = in.kappa2;
        out[i].support = in.support;
        out[i].radius2 = in.radius2;
    }
    return S2M_OK;
}

s2m_status s2m_surface_summary_get(const s2m_surface* s, s2m_surface_summary* out) {
    if (s2m_status st = require(s != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        const s2m::geomkit::SurfaceReport rep = s2m::geomkit::aggregate(s->samples);
        out->n_samples = static_cast<long long>(rep.n_samples);
        out->delta = rep.delta;
        out->sup_kappa = rep.sup_kappa;
        out->min_sigma2 = rep.min_sigma2;
        out->min_support = rep.min_support;
        out->two_convex = rep.two_convex ? 1 : 0;
    });
}

s2m_status s2m_surface_report_json(const s2m_surface* s, char** json) {
    if (s2m_status st = require(s != nullptr && json != nullptr, "null argument")) return st;
    return guarded([&] {
        *json = dup_string(s2m::io::surface_report_to_json(s2m::geomkit::aggregate(s->samples)));
    });
}

s2m_status s2m_inverse_phi(const s2m_surface* s, double alpha, double* out) {
    if (s2m_status st = require(s != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        const std::vector<double> phi = s2m::geomkit::inverse_phi(s->samples, alpha);
        std::memcpy(out, phi.data(), phi.size() * sizeof(double));
    });
}

s2m_status s2m_surface_csv(const s2m_surface* s, double alpha, char** csv) {
    if (s2m_status st = require(s != nullptr && csv != nullptr, "null argument")) return st;
    return guarded([&] { *csv = dup_string(s2m::io::samples_to_csv(s->samples, alpha)); });
}

s2m_status s2m_codazzi_residual(const s2m_surface* s, double* out) {
    if (s2m_status st = require(s != nullptr && out != nullptr, "null argument")) return st;
    return guarded([&] {
        const auto* grid = std::get_if<s2m::geomkit::RadialGrid>(&s->spec);
        if (!grid)
            throw std::invalid_argument("codazzi residual is defined for radial grids only");
        *out = s2m::geomkit::codazzi_residual(*grid);
    });
}

} /* extern "C" */
