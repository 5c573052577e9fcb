// Acceptance suite: every release criterion in one binary, one verdict line
// each. Exit code is the number of failed criteria.

#include "core/estimate.hpp"
#include "core/geomkit.hpp"
#include "core/minval.hpp"
#include "core/suites.hpp"
#include "core/symfun.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void verdict(int id, bool ok, const std::string& label) {
    std::printf("%s  %d  %s\n", ok ? "PASS" : "FAIL", id, label.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool near(double x, double y, double tol) {
    return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

}  // namespace

int main() {
    // ---- criteria 1 & 2: solver agreement and optimality on 10k instances ----
    {
        const auto t0 = Clock::now();
        s2m::minval::FuzzOptions opt;
        opt.seed = 42;
        opt.trials = 10000;
        opt.n_min = 2;
        opt.n_max = 12;
        opt.feasible_samples = 100;
        opt.direction_samples = 100;
        opt.shards = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        const s2m::minval::FuzzReport rep = s2m::minval::fuzz_compare(opt);
        const double elapsed = seconds_since(t0);

        verdict(1,
                rep.max_value_dev <= 1e-9 && rep.max_minimizer_dev <= 1e-8 && elapsed < 30.0,
                "three-way agreement of closed form, both solver routes and the elimination "
                "oracle on 10000 seeded instances, N in [2,12] (value dev " +
                    fmt(rep.max_value_dev) + " <= 1e-9, minimizer dev " +
                    fmt(rep.max_minimizer_dev) + " <= 1e-8, " + fmt(elapsed) + "s < 30s)");
        verdict(2,
                rep.lower_bound_violations == 0 && rep.uniqueness_violations == 0,
                "lower-bound optimality and strict minimality probes (100 feasible points and "
                "100 feasible directions per instance; " +
                    std::to_string(rep.lower_bound_violations) + " bound violations, " +
                    std::to_string(rep.uniqueness_violations) + " minimality violations)");
    }

    // ---- criteria 3, 4, 5: identity suites over 10k seeded draws ----
    {
        const s2m::suites::SymcheckReport rep = s2m::suites::run_symcheck({7, 10000});
        const double worst_sym =
            std::max({rep.worst_sym31, rep.worst_sym32, rep.worst_sym33});
        verdict(3, worst_sym <= 1e-12,
                "deleted-index recombination identity suite over 10000 random draws, n <= 10 "
                "(worst scaled residual " +
                    fmt(worst_sym) + " <= 1e-12)");
        verdict(4,
                rep.worst_id326 <= 1e-10 && rep.worst_id327 <= 1e-10 && rep.positivity_ok &&
                    rep.worst_coeff <= 1e-10 && rep.worst_point_min <= 1e-10 &&
                    rep.point_wellposed_ok,
                "point-estimate algebra: sum identities (" + fmt(rep.worst_id326) + ", " +
                    fmt(rep.worst_id327) + " <= 1e-10), strict positivity on the cone, "
                    "quadratic-coefficient identity (" +
                    fmt(rep.worst_coeff) + " <= 1e-10), specialized minimum vs closed form (" +
                    fmt(rep.worst_point_min) + " <= 1e-10), always well-posed");
        verdict(5,
                rep.worst_remark42 <= 1e-10 && rep.worst_explore2 <= 1e-10 &&
                    rep.remark42_lb_violations == 0,
                "convexity lower bound equals the induced closed form (" +
                    fmt(rep.worst_remark42) + " <= 1e-10), explorer at k=2 matches (" +
                    fmt(rep.worst_explore2) + " <= 1e-10), no lower-bound violations");
    }

    // ---- criterion 6: spectral facts of the quadratic-part matrix ----
    {
        s2m::Rng rng(29);
        double worst = 0.0;
        for (int n = 2; n <= 20; ++n) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, -0.5);
            m.diagonal().setZero();
            const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
            worst = std::max(worst, (m * ones + 0.5 * (n - 1) * ones).cwiseAbs().maxCoeff());
            for (int rep = 0; rep < 20; ++rep) {
                Eigen::VectorXd w(n);
                for (int i = 0; i < n; ++i) w(i) = rng.normal();
                w -= w.sum() / n * Eigen::VectorXd::Ones(n);
                w.normalize();
                worst = std::max(worst, (m * w - 0.5 * w).cwiseAbs().maxCoeff());
            }
        }
        verdict(6, worst <= 1e-12,
                "quadratic-part matrix eigen-action residuals for N in [2,20] (worst " +
                    fmt(worst) + " <= 1e-12)");
    }

    // ---- criterion 7: geometry ----
    {
        const auto t0 = Clock::now();
        using namespace s2m::geomkit;

        bool sphere_ok = true;
        for (const SurfaceSample& s : ellipsoid_samples({1, 1, 1}, 64, 128))
            sphere_ok = sphere_ok && std::abs(s.kappa1 - 1.0) <= 1e-12 &&
                        std::abs(s.kappa2 - 1.0) <= 1e-12 && std::abs(s.support - 1.0) <= 1e-12 &&
                        std::abs(s.support * s.support / s.radius2 - 1.0) <= 1e-12;
        {
            const auto analytic = ellipsoid_samples({1, 1, 1}, 64, 128);
            for (double p : inverse_phi(analytic, 1.0))
                sphere_ok = sphere_ok && std::abs(p - 1.0) <= 1e-12;
        }

        bool grid_ok = true;
        {
            const RadialGrid g =
                RadialGrid::from_function(128, 256, [](double, double) { return 1.0; });
            const auto samples = radial_grid_samples(g);
            for (const SurfaceSample& s : samples)
                grid_ok = grid_ok && std::abs(s.kappa1 - 1.0) <= 1e-6 &&
                          std::abs(s.kappa2 - 1.0) <= 1e-6 && std::abs(s.support - 1.0) <= 1e-8;
            grid_ok = grid_ok && std::abs(aggregate(samples).delta - 1.0) <= 1e-8;
            for (double p : inverse_phi(samples, 1.0))
                grid_ok = grid_ok && std::abs(p - 1.0) <= 1e-6;
        }

        const std::array<double, 3> axes{2, 1, 1};
        double err[3];
        {
            int idx = 0;
            for (int nt : {64, 128, 256}) {
                double worst = 0.0;
                const RadialGrid grid = ellipsoid_radial_grid(axes, nt, 2 * nt);
                for (const SurfaceSample& s : radial_grid_samples(grid)) {
                    const SurfaceSample exact =
                        ellipsoid_sample_at_direction(axes, s.position.normalized());
                    worst = std::max({worst, std::abs(s.kappa1 - exact.kappa1),
                                      std::abs(s.kappa2 - exact.kappa2)});
                }
                err[idx++] = worst;
            }
        }
        const double r1 = err[0] / err[1], r2 = err[1] / err[2];
        const bool conv_ok = r1 >= 3.0 && r1 <= 5.0 && r2 >= 3.0 && r2 <= 5.0;

        const auto bump = [](double th, double) { return 1.0 + 0.1 * std::cos(th); };
        const double c0 = codazzi_residual(RadialGrid::from_function(64, 128, bump));
        const double c1 = codazzi_residual(RadialGrid::from_function(128, 256, bump));
        const double c2 = codazzi_residual(RadialGrid::from_function(256, 512, bump));
        const double sphere_codazzi =
            codazzi_residual(RadialGrid::from_function(128, 256, [](double, double) { return 1.0; }));
        const bool codazzi_ok = c0 > c1 && c1 > c2 && c0 / c1 >= 3.0 && c0 / c1 <= 5.0 &&
                                c1 / c2 >= 3.0 && c1 / c2 <= 5.0 && sphere_codazzi <= 1e-6;

        const double elapsed = seconds_since(t0);
        verdict(7,
                sphere_ok && grid_ok && conv_ok && codazzi_ok && elapsed < 60.0,
                "geometry: spheres exact (analytic 1e-12, grid 1e-6), curvature convergence "
                "ratios " +
                    fmt(r1) + ", " + fmt(r2) + " in [3,5], codazzi ratios " + fmt(c0 / c1) +
                    ", " + fmt(c1 / c2) + " in [3,5] (sphere residual " + fmt(sphere_codazzi) +
                    " <= 1e-6), " + fmt(elapsed) + "s < 60s");
    }

    // ---- criterion 8: explorer regressions ----
    {
        using s2m::symfun::LambdaVec;
        const LambdaVec ones({1, 1, 1, 1});
        const s2m::estimate::Exploration a = s2m::estimate::explore_k(ones, 3, 0.0, 0.0);
        const s2m::estimate::Exploration b = s2m::estimate::explore_k(ones, 3, 1.0, 0.0);
        const bool ok = a.value && std::abs(*a.value) <= 1e-10 && b.value &&
                        std::abs(*b.value - 4.0 / 3.0) <= 1e-10;
        verdict(8, ok,
                "explorer regressions at k=3, n=4: value " + fmt(a.value ? *a.value : NAN) +
                    " for (b,C)=(0,0) and " + fmt(b.value ? *b.value : NAN) +
                    " for (b,C)=(1,0), each to 1e-10");
    }

    // ---- criterion 9: structural bound fixtures + disclosure ----
    {
        using s2m::estimate::PointData;
        using s2m::estimate::QuadBound;
        auto pd = [](double alpha, double varphi, double support) {
            return PointData({1, 1, 1}, 0.0, support, {0, 0, 0}, varphi, {0, 0, 0}, alpha);
        };
        const QuadBound q1 = s2m::estimate::final_bound(pd(1.0, 1.0, 1.0), 0.5, 0.0, 0.0);
        const QuadBound q2 = s2m::estimate::final_bound(pd(0.0, 2.0, 1.0), 0.5, 0.0, 8.0);
        const QuadBound q3 = s2m::estimate::final_bound(pd(1.5, 1.0, 1.0), 1.0, 0.0, 0.0);
        const bool ok = q1.lead == 1.0 && q1.h_bound == 0.0 && q2.lead == 4.0 &&
                        near(q2.h_bound, std::sqrt(2.0), 1e-15) && near(q3.lead, 0.25, 1e-15);
        verdict(9, ok,
                "the analytic a-priori estimates fix no numeric reference constants, so "
                "acceptance rests on criteria 1-8 plus these direct-substitution fixtures of "
                "the final bound's coefficient forms (lead 1, 4, 0.25; largest root 0, sqrt 2)");
    }

    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
