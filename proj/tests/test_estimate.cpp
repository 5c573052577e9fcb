#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/estimate.hpp"
#include "core/suites.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace s2m::estimate;
using s2m::Rng;
using s2m::minval::MinProblem;
using s2m::symfun::IndexSet;
using s2m::symfun::LambdaVec;
using testutil::near;

namespace {

PointData simple_point(std::vector<double> lam, double h111, double alpha,
                       std::vector<double> grad = {}, double support = 1.0, double varphi = 3.0) {
    const std::size_t n = lam.size();
    if (grad.empty()) grad.assign(n, 0.0);
    return PointData(std::move(lam), h111, support, std::vector<double>(n, 0.0), varphi,
                     std::move(grad), alpha);
}

}  // namespace

TEST_CASE("point problem assembly") {
    {
        const MinProblem p = build_point_problem(simple_point({1, 1, 1}, 1.0, 1.0));
        CHECK(p.dim == 2);
        CHECK(p.a == std::vector<double>{2, 2});
        CHECK(p.b == 1.0);
        CHECK(p.cap_c == -1.0);
    }
    {
        const MinProblem p = build_point_problem(simple_point({1, 1, 1}, 0.0, 1.0));
        CHECK(p.b == 0.0);
        CHECK(p.cap_c == 0.0);
    }
    {
        const MinProblem p =
            build_point_problem(simple_point({2, 1, 1}, 0.0, 0.0, {7, 0, 0}));
        CHECK(p.a == std::vector<double>{3, 3});
        CHECK(p.cap_c == -7.0);
    }
}

TEST_CASE("construction permutes the largest curvature to the front") {
    const PointData pd(std::vector<double>{1.0, 3.0, 2.0}, 0.5, 1.0,
                       std::vector<double>{10, 20, 30}, 1.0, std::vector<double>{-1, -2, -3},
                       0.0);
    CHECK(pd.original_max_index() == 1);
    CHECK(pd.lam().values() == std::vector<double>{3, 1, 2});
    CHECK(pd.tangent() == std::vector<double>{20, 10, 30});
    CHECK(pd.varphi_grad() == std::vector<double>{-2, -1, -3});
}

TEST_CASE("sum identities on fixed vectors") {
    {
        const auto [r1, r2] = identity_checks(LambdaVec({1, 1, 1}));
        CHECK(r1 == 0.0);
        CHECK(r2 == 0.0);
    }
    {
        const auto [r1, r2] = identity_checks(LambdaVec({2, 1, 1}));
        CHECK(r1 == 0.0);
        CHECK(r2 == 0.0);  // 36 - 18 = 2*4 + 2*5
    }
    {
        const auto [r1, r2] = identity_checks(LambdaVec({1, 0, 0}));
        CHECK(r1 == 0.0);
        CHECK(r2 == 0.0);  // 4 - 2 = 2*1 + 0
    }
}

TEST_CASE("sum identities hold for arbitrary vectors") {
    Rng rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = rng.uniform_int(2, 10);
        const LambdaVec lam(testutil::random_lambda(rng, n));
        const auto [r1, r2] = identity_checks(lam);
        const double s1a = s2m::symfun::sigma_abs(1, lam);
        const double s2a = s2m::symfun::sigma_abs(2, lam);
        const double sum_a = (n - 1) * s1a;
        CHECK(r1 <= 1e-10 * (1.0 + 2.0 * sum_a));
        CHECK(r2 <= 1e-10 * (1.0 + 2.0 * sum_a * sum_a + (n - 1) * lam[0] * lam[0] +
                             2.0 * (n - 2) * s2a));
    }
}

TEST_CASE("coefficient identity on fixed vectors") {
    // direct evaluations of both sides, frozen by hand
    CHECK(coeff_identity_residual(LambdaVec({1, 1, 1}), 1.0) == 0.0);  // both sides -9
    CHECK(coeff_identity_residual(LambdaVec({1, 1, 1}), 0.0) == 0.0);  // both sides 12
    CHECK(coeff_identity_residual(LambdaVec({2, 1, 1}), 1.0) == 0.0);  // both sides -25
}

TEST_CASE("coefficient identity sides evaluate to the frozen values") {
    // spot-check the left side against the hand computation for (1,1,1), alpha=1
    const LambdaVec lam({1, 1, 1});
    const double l1 = 1.0;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 2; i <= 3; ++i) {
        const double s = s2m::symfun::sigma_del(1, lam, IndexSet(i));
        sum += s;
        sum_sq += s * s;
    }
    const double bracket = s2m::symfun::sigma_del(1, lam, IndexSet(1)) * l1 - 1.0 * 3.0;
    const double lhs = l1 * l1 * (sum * sum - 2.0 * sum_sq) + 2.0 * bracket * l1 * sum -
                       1.0 * bracket * bracket;
    CHECK(lhs == -9.0);
}

TEST_CASE("point minimum via the specialized denominator") {
    CHECK(sigma2_point_minimum(simple_point({1, 1, 1}, 0.0, 1.0)) == 0.0);
    CHECK(near(sigma2_point_minimum(simple_point({1, 1, 1}, 1.0, 0.0)), 0.75, 1e-15));
    CHECK(near(sigma2_point_minimum(simple_point({1, 1, 1}, 1.0, 1.0)), -9.0 / 16.0, 1e-15));
}

TEST_CASE("point minimum agrees with the generic closed form") {
    Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = rng.uniform_int(3, 10);
        const LambdaVec lam = s2m::suites::sample_gamma2_margin(rng, n);
        std::vector<double> tangent(n), grad(n);
        for (double& t : tangent) t = rng.uniform(-1.0, 1.0);
        for (double& g : grad) g = rng.uniform(-3.0, 3.0);
        const PointData pd(lam.values(), rng.uniform(-3.0, 3.0), rng.uniform(0.5, 2.0), tangent,
                           rng.uniform(0.5, 3.0), grad, rng.uniform(-3.0, 2.0));
        const MinProblem mp = build_point_problem(pd);
        CHECK(s2m::minval::check_conditions(mp).cls == s2m::minval::Class::WellPosed);
        CHECK(near(sigma2_point_minimum(pd), s2m::minval::min_value_closed_form(mp), 1e-10));
    }
}

TEST_CASE("point minimum at n = 2 matches direct elimination") {
    // single variable: the constraint pins x2 = -C/lambda_1, f = -h111 x2
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const double l1 = rng.uniform(0.5, 3.0);
        const double l2 = rng.uniform(0.1, l1);
        const double h111 = rng.uniform(-2.0, 2.0);
        const double alpha = rng.uniform(-2.0, 2.0);
        const double support = rng.uniform(0.5, 2.0);
        const double phi1 = rng.uniform(-2.0, 2.0);
        const PointData pd(std::vector<double>{l1, l2}, h111, support,
                           std::vector<double>{0.3, -0.4}, 1.0, std::vector<double>{phi1, 0.0},
                           alpha);
        const double s2 = l1 * l2;
        const double cap_c =
            (l2 * l1 - alpha * s2) * (h111 / l1) - phi1 * std::pow(support, alpha);
        const double x2 = -cap_c / l1;
        CHECK(near(sigma2_point_minimum(pd), -h111 * x2, 1e-12));
    }
}

TEST_CASE("convexity lower bound on fixed vectors") {
    CHECK(remark42_bound(LambdaVec({1, 1, 1}), 0.0, 0.0) == 0.0);
    CHECK(near(remark42_bound(LambdaVec({1, 1, 1}), 1.0, 0.0), 0.75, 1e-15));
    CHECK(near(remark42_bound(LambdaVec({2, 1, 1}), 1.0, 1.0), 0.75, 1e-15));
}

TEST_CASE("convexity bound equals the induced closed form") {
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = rng.uniform_int(3, 10);
        const LambdaVec lam = s2m::suites::sample_gamma2_margin(rng, n);
        const double b = rng.uniform(-3.0, 3.0);
        const double cap_c = rng.uniform(-3.0, 3.0);
        std::vector<double> a(n - 1);
        for (int i = 2; i <= n; ++i)
            a[i - 2] = s2m::symfun::sigma_del(1, lam, IndexSet(i));
        const double total = s2m::symfun::sigma_del(1, lam, IndexSet(1)) * b + cap_c;
        const MinProblem induced(n - 1, b, total, a);
        CHECK(near(remark42_bound(lam, b, cap_c),
                   s2m::minval::min_value_closed_form(induced), 1e-10));
    }
}

TEST_CASE("final bound coefficient forms") {
    {
        const QuadBound qb = final_bound(simple_point({1, 1, 1}, 0.0, 1.0, {}, 1.0, 1.0), 0.5,
                                         0.0, 0.0);
        CHECK(qb.lead == 1.0);
        CHECK(qb.h_bound == 0.0);
    }
    {
        const QuadBound qb = final_bound(simple_point({1, 1, 1}, 0.0, 0.0, {}, 1.0, 2.0), 0.5,
                                         0.0, 8.0);
        CHECK(qb.lead == 4.0);
        CHECK(near(qb.h_bound, std::sqrt(2.0), 1e-15));
    }
    {
        // above the exponent threshold the |X|^2 variant applies
        const QuadBound qb = final_bound(simple_point({1, 1, 1}, 0.0, 1.5, {}, 1.0, 1.0), 1.0,
                                         0.0, 0.0);
        CHECK(near(qb.lead, 0.25, 1e-15));
    }
    {
        // the root really bounds admissible h: lead h^2 <= b1 h + b0
        const QuadBound qb = final_bound(simple_point({1, 1, 1}, 0.0, 0.5, {}, 1.3, 0.7), 1.0,
                                         2.0, 5.0);
        const double h = qb.h_bound;
        CHECK(near(qb.lead * h * h, qb.lin * h + qb.konst, 1e-12));
        const double above = 1.01 * h;
        CHECK(qb.lead * above * above > qb.lin * above + qb.konst);
    }
}

TEST_CASE("final bound rejects out-of-range exponents") {
    CHECK_THROWS_AS(final_bound(simple_point({1, 1, 1}, 0.0, 1.6), 0.5, 0.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(final_bound(simple_point({1, 1, 1}, 0.0, 1.0), 0.0, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(final_bound(simple_point({1, 1, 1}, 0.0, 1.0), 1.5, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(final_bound(simple_point({1, 1, 1}, 0.0, 0.0), 1.0, 0.0, -1.0),
                    std::domain_error);  // infeasible inequality
}

TEST_CASE("explorer fixtures") {
    const LambdaVec ones({1, 1, 1, 1});
    {
        const Exploration ex = explore_k(ones, 3, 0.0, 0.0);
        CHECK(ex.cls == s2m::minval::Class::WellPosed);
        REQUIRE(ex.value.has_value());
        CHECK(near(*ex.value, 0.0, 1e-10));
        for (double x : *ex.minimizer) CHECK(near(x, 0.0, 1e-10));
    }
    {
        const Exploration ex = explore_k(ones, 3, 1.0, 0.0);
        REQUIRE(ex.value.has_value());
        CHECK(near(*ex.value, 4.0 / 3.0, 1e-10));
        for (double x : *ex.minimizer) CHECK(near(x, -1.0 / 3.0, 1e-10));
    }
}

TEST_CASE("explorer at k = 2 is the closed-form problem") {
    Rng rng(19);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.uniform_int(2, 8);
        const LambdaVec lam = s2m::suites::sample_gamma2_margin(rng, n);
        const double b = rng.uniform(-3.0, 3.0);
        const double cap_c = rng.uniform(-3.0, 3.0);
        const Exploration ex = explore_k(lam, 2, b, cap_c);
        REQUIRE(ex.value.has_value());
        CHECK(near(*ex.value, remark42_bound(lam, b, cap_c), 1e-10));
    }
}

TEST_CASE("explorer input validation") {
    const LambdaVec ones({1, 1, 1});
    CHECK_THROWS_AS(explore_k(ones, 4, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(explore_k(ones, 1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(explore_k(LambdaVec({-1, -1, -1}), 2, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("point data validation") {
    CHECK_THROWS_AS(PointData({-1, -1}, 0, 1, {0, 0}, 1, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(PointData({1, 1}, 0, 0, {0, 0}, 1, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(PointData({1, 1}, 0, 1, {0, 0}, -1, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(PointData({1, 1}, 0, 1, {0}, 1, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_point_problem(simple_point({1, 1}, 0.0, 0.0)), std::invalid_argument);
}
