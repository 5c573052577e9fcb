#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sigma2min/sigma2min.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

bool near(double x, double y, double tol) {
    return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

std::string take(char* s) {
    std::string out = s ? s : "";
    s2m_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("symmetric function entry points") {
    const double lam[3] = {1, 2, 3};
    double out = 0.0;
    CHECK(s2m_sigma(2, lam, 3, &out) == S2M_OK);
    CHECK(out == 11.0);
    CHECK(s2m_sigma(4, lam, 3, &out) == S2M_OK);
    CHECK(out == 0.0);

    const int excl[1] = {1};
    CHECK(s2m_sigma_del(2, lam, 3, excl, 1, &out) == S2M_OK);
    CHECK(out == 6.0);
    const int bad[1] = {9};
    CHECK(s2m_sigma_del(2, lam, 3, bad, 1, &out) == S2M_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(s2m_last_error()) > 0);

    double grad[3] = {0, 0, 0};
    CHECK(s2m_sigma_grad(2, lam, 3, grad) == S2M_OK);
    CHECK(grad[0] == 5.0);
    CHECK(grad[1] == 4.0);
    CHECK(grad[2] == 3.0);

    const double v[4] = {1, 0, 0, 1};  // identity
    CHECK(s2m_sigma2_hessian_quadform(v, 2, &out) == S2M_OK);
    CHECK(out == -2.0);

    int inside = 0;
    CHECK(s2m_in_gamma_k(lam, 3, 3, &inside) == S2M_OK);
    CHECK(inside == 1);
    const double mixed[3] = {1, 1, -0.5};
    CHECK(s2m_in_gamma_k(mixed, 3, 2, &inside) == S2M_OK);
    CHECK(inside == 0);
}

TEST_CASE("problem lifecycle and solvers") {
    const double a[2] = {1, 1};
    s2m_problem* p = nullptr;
    REQUIRE(s2m_problem_create(2, 1.0, 2.0, a, &p) == S2M_OK);
    CHECK(s2m_problem_dim(p) == 2);

    double disc = 0.0;
    s2m_class cls;
    CHECK(s2m_check_conditions(p, &disc, &cls) == S2M_OK);
    CHECK(disc == 2.0);
    CHECK(cls == S2M_WELL_POSED);

    double value = 0.0;
    CHECK(s2m_min_value_closed_form(p, &value) == S2M_OK);
    CHECK(near(value, 1.0, 1e-15));

    const double x[2] = {-1, -1};
    CHECK(s2m_evaluate_f(p, x, 2, &value) == S2M_OK);
    CHECK(value == 1.0);

    for (s2m_method method : {S2M_METHOD_EIGEN, S2M_METHOD_LAGRANGE, S2M_METHOD_ORACLE}) {
        s2m_solution* sol = nullptr;
        REQUIRE(s2m_solve(p, method, &sol) == S2M_OK);
        CHECK(near(s2m_solution_value(sol), 1.0, 1e-12));
        CHECK(s2m_solution_dim(sol) == 2);
        double xs[2];
        CHECK(s2m_solution_minimizer(sol, xs) == S2M_OK);
        CHECK(near(xs[0], -1.0, 1e-10));
        CHECK(near(xs[1], -1.0, 1e-10));
        CHECK(s2m_solution_method(sol) == method);
        s2m_solution_free(sol);
    }

    char* json = nullptr;
    CHECK(s2m_problem_to_json(p, &json) == S2M_OK);
    CHECK(take(json) == "{\"n\":2,\"b\":1,\"C\":2,\"a\":[1,1]}");
    s2m_problem_free(p);
}

TEST_CASE("solving an unbounded problem reports the class through the status") {
    const double a[3] = {1, 0, 0};
    s2m_problem* p = nullptr;
    REQUIRE(s2m_problem_create(3, 0.0, 0.0, a, &p) == S2M_OK);
    double value = 0.0;
    CHECK(s2m_min_value_closed_form(p, &value) == S2M_ERR_NOT_WELL_POSED);
    s2m_solution* sol = nullptr;
    CHECK(s2m_solve(p, S2M_METHOD_LAGRANGE, &sol) == S2M_ERR_NOT_WELL_POSED);
    CHECK(sol == nullptr);
    s2m_class cls;
    CHECK(s2m_check_conditions(p, nullptr, &cls) == S2M_OK);
    CHECK(cls == S2M_UNBOUNDED);
    s2m_problem_free(p);
}

TEST_CASE("json parsing through the C surface") {
    s2m_problem* p = nullptr;
    CHECK(s2m_problem_from_json("{\"n\":2,\"b\":0,\"C\":0,\"a\":[3,3]}", &p) == S2M_OK);
    s2m_problem_free(p);
    CHECK(s2m_problem_from_json("{nope", &p) == S2M_ERR_PARSE);
}

TEST_CASE("verify and symcheck runs") {
    s2m_verify_summary summary{};
    char* json = nullptr;
    REQUIRE(s2m_verify_run(0, 25, 2, 8, &summary, &json) == S2M_OK);
    CHECK(summary.pass == 1);
    CHECK(summary.trials == 25);
    CHECK(summary.max_value_dev <= 1e-9);
    CHECK(take(json).find("\"worst\"") != std::string::npos);

    int pass = 0;
    REQUIRE(s2m_symcheck_run(7, 50, &pass, &json) == S2M_OK);
    CHECK(pass == 1);
    CHECK(take(json).find("\"pass\":true") != std::string::npos);
}

TEST_CASE("estimate entry points") {
    const double lam[3] = {1, 1, 1};
    const double zeros[3] = {0, 0, 0};
    s2m_point_data* pd = nullptr;
    REQUIRE(s2m_point_data_create(3, lam, 1.0, 1.0, zeros, 3.0, zeros, 1.0, &pd) == S2M_OK);

    s2m_problem* p = nullptr;
    REQUIRE(s2m_build_point_problem(pd, &p) == S2M_OK);
    CHECK(s2m_problem_dim(p) == 2);
    char* json = nullptr;
    s2m_problem_to_json(p, &json);
    CHECK(take(json) == "{\"n\":2,\"b\":1,\"C\":-1,\"a\":[2,2]}");
    s2m_problem_free(p);

    double value = 0.0;
    CHECK(s2m_sigma2_point_minimum(pd, &value) == S2M_OK);
    CHECK(near(value, -9.0 / 16.0, 1e-13));

    double r1 = -1, r2 = -1;
    CHECK(s2m_identity_checks(lam, 3, &r1, &r2) == S2M_OK);
    CHECK(r1 == 0.0);
    CHECK(r2 == 0.0);

    CHECK(s2m_coeff_identity_residual(lam, 3, 1.0, &value) == S2M_OK);
    CHECK(value == 0.0);

    CHECK(s2m_remark42_bound(lam, 3, 1.0, 0.0, &value) == S2M_OK);
    CHECK(near(value, 0.75, 1e-15));

    double lead = 0.0, h_bound = 0.0;
    CHECK(s2m_final_bound(pd, 0.5, 0.0, 0.0, &lead, &h_bound) == S2M_OK);
    CHECK(lead == 3.0);  // (2 - alpha) varphi s^(alpha+1) with varphi = 3
    CHECK(h_bound == 0.0);

    s2m_point_data_free(pd);

    // invalid cone membership surfaces as invalid argument
    const double bad[3] = {-1, -1, -1};
    CHECK(s2m_point_data_create(3, bad, 0, 1, zeros, 1, zeros, 0, &pd) ==
          S2M_ERR_INVALID_ARGUMENT);
}

TEST_CASE("explorer entry points") {
    const double ones[4] = {1, 1, 1, 1};
    s2m_class cls;
    double value = 0.0;
    double minimizer[3];
    REQUIRE(s2m_explore_k(ones, 4, 3, 1.0, 0.0, &cls, &value, minimizer) == S2M_OK);
    CHECK(cls == S2M_WELL_POSED);
    CHECK(near(value, 4.0 / 3.0, 1e-10));
    CHECK(near(minimizer[0], -1.0 / 3.0, 1e-10));

    char* csv = nullptr;
    REQUIRE(s2m_explore_csv(4, 3, 0, 3, &csv) == S2M_OK);
    const std::string text = take(csv);
    CHECK(text.substr(0, text.find('\n')) == "n,k,lambda1,lambda2,lambda3,lambda4,b,C,class,value");
    CHECK(text.find("4,3,1,1,1,1,0,0,WellPosed,0") != std::string::npos);
    CHECK(text.find("4,3,1,1,1,1,1,0,WellPosed,1.3333333333333333") != std::string::npos);

    CHECK(s2m_explore_csv(3, 4, 0, 1, &csv) == S2M_ERR_INVALID_ARGUMENT);
}

TEST_CASE("surface entry points") {
    const double axes[3] = {1, 1, 1};
    s2m_surface* surf = nullptr;
    REQUIRE(s2m_surface_ellipsoid(axes, 16, 32, &surf) == S2M_OK);
    CHECK(s2m_surface_sample_count(surf) == 16 * 32);

    std::vector<s2m_sample> samples(16 * 32);
    CHECK(s2m_surface_samples(surf, samples.data()) == S2M_OK);
    CHECK(near(samples[0].kappa1, 1.0, 1e-12));
    CHECK(near(samples[0].support, 1.0, 1e-12));

    s2m_surface_summary summary{};
    CHECK(s2m_surface_summary_get(surf, &summary) == S2M_OK);
    CHECK(summary.two_convex == 1);
    CHECK(near(summary.delta, 1.0, 1e-12));

    std::vector<double> phi(16 * 32);
    CHECK(s2m_inverse_phi(surf, 1.0, phi.data()) == S2M_OK);
    CHECK(near(phi[0], 1.0, 1e-12));

    char* csv = nullptr;
    CHECK(s2m_surface_csv(surf, 1.0, &csv) == S2M_OK);
    CHECK(take(csv).substr(0, 9) == "theta,phi");

    double resid = 0.0;
    CHECK(s2m_codazzi_residual(surf, &resid) == S2M_ERR_INVALID_ARGUMENT);  // not a grid
    s2m_surface_free(surf);

    // radial grid via JSON, then the codazzi diagnostic applies
    std::string rows;
    for (int j = 0; j < 16; ++j) {
        rows += rows.empty() ? "[" : ",[";
        for (int i = 0; i < 32; ++i) rows += (i ? ",1" : "1");
        rows += "]";
    }
    const std::string spec =
        "{\"kind\":\"radial_grid\",\"n_theta\":16,\"n_phi\":32,\"rho\":[" + rows + "]}";
    REQUIRE(s2m_surface_from_json(spec.c_str(), &surf) == S2M_OK);
    CHECK(s2m_codazzi_residual(surf, &resid) == S2M_OK);
    CHECK(resid <= 1e-10);
    s2m_surface_free(surf);

    CHECK(s2m_surface_from_json("{\"kind\":\"nope\"}", &surf) == S2M_ERR_PARSE);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
    CHECK(s2m_sigma(1, nullptr, 3, nullptr) == S2M_ERR_INVALID_ARGUMENT);
    CHECK(s2m_problem_create(2, 0, 0, nullptr, nullptr) == S2M_ERR_INVALID_ARGUMENT);
    CHECK(s2m_problem_dim(nullptr) == 0);
    CHECK(std::isnan(s2m_solution_value(nullptr)));
    CHECK(s2m_surface_sample_count(nullptr) == 0);
}
