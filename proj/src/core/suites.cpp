#include "core/suites.hpp"

#include "core/io.hpp"
#include "core/minval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace s2m::suites {

using symfun::IndexSet;
using symfun::LambdaVec;

LambdaVec sample_gamma2_margin(Rng& rng, int n) {
    for (;;) {
        const double c = rng.uniform(0.5, 2.5);
        std::vector<double> lam(static_cast<std::size_t>(n));
        double norm2 = 0.0;
        for (double& x : lam) {
            x = c + rng.uniform(-2.0, 2.0);
            norm2 += x * x;
        }
        const double norm = std::sqrt(norm2);
        const LambdaVec lv(lam);
        if (symfun::sigma(1, lv) >= 0.05 * std::max(1.0, norm) &&
            symfun::sigma(2, lv) >= 0.05 * std::max(1.0, norm2))
            return lv;
    }
}

LambdaVec sample_gamma_k(Rng& rng, int n, int k) {
    for (int attempt = 0;; ++attempt) {
        std::vector<double> lam(static_cast<std::size_t>(n));
        const double lo = attempt < 200 ? -0.5 : 0.2;  // fall back to the positive orthant
        for (double& x : lam) x = rng.uniform(lo, 3.0);
        const LambdaVec lv(lam);
        const std::vector<double> e = symfun::esf_all(lv.values());
        bool ok = true;
        for (int j = 1; j <= k && ok; ++j)
            ok = e[static_cast<std::size_t>(j)] > 1e-6;
        if (ok) return lv;
    }
}

namespace {

double rel(double resid, double scale) { return resid / (1.0 + scale); }

double rel_dev(double x, double y) {
    return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
}

LambdaVec abs_lambda(const LambdaVec& lam) {
    std::vector<double> a = lam.values();
    for (double& x : a) x = std::abs(x);
    return LambdaVec(std::move(a));
}

LambdaVec max_first(const LambdaVec& lam) {
    std::vector<double> v = lam.values();
    const auto it = std::max_element(v.begin(), v.end());
    std::iter_swap(v.begin(), it);
    return LambdaVec(std::move(v));
}

void check_symfun_identities(Rng& rng, SymcheckReport& rep) {
    const int n = rng.uniform_int(2, 10);
    std::vector<double> raw(static_cast<std::size_t>(n));
    for (double& x : raw) x = rng.uniform(-5.0, 5.0);
    const LambdaVec lam(raw);
    const LambdaVec alam = abs_lambda(lam);

    for (int k = 0; k <= n; ++k) {
        const double sk = symfun::sigma(k, lam);
        const double sk_abs = symfun::sigma_abs(k, lam);

        if (k >= 1) {
            for (int i = 1; i <= n; ++i) {
                const IndexSet del(i);
                const double resid =
                    std::abs(sk - symfun::sigma_del(k, lam, del) -
                             lam[i - 1] * symfun::sigma_del(k - 1, lam, del));
                rep.worst_sym31 = std::max(rep.worst_sym31, rel(resid, sk_abs));
            }
        }
        {
            double lhs = 0.0;  // k = 0 keeps the empty sum: sigma_{-1} vanishes
            if (k >= 1)
                for (int i = 1; i <= n; ++i)
                    lhs += lam[i - 1] * symfun::sigma_del(k - 1, lam, IndexSet(i));
            const double resid = std::abs(lhs - k * sk);
            rep.worst_sym32 = std::max(rep.worst_sym32, rel(resid, k * sk_abs));
        }
        {
            double lhs = 0.0;
            for (int i = 1; i <= n; ++i) lhs += symfun::sigma_del(k, lam, IndexSet(i));
            const double resid = std::abs(lhs - (n - k) * sk);
            rep.worst_sym33 = std::max(rep.worst_sym33, rel(resid, (n - k) * sk_abs));
        }
    }

    // section-3 sum identities hold for arbitrary lambda as algebra
    const auto [r1, r2] = estimate::identity_checks(lam);
    const double s1a = symfun::sigma(1, alam);
    const double s2a = symfun::sigma(2, alam);
    const double l1a = std::abs(lam[0]);
    const double sum_a = (n - 1) * s1a;
    rep.worst_id326 = std::max(rep.worst_id326, rel(r1, 2.0 * sum_a));
    const double scale27 =
        sum_a * sum_a + (n - 2) * (n - 1) * s1a * s1a + (n - 1) * l1a * l1a + 2 * (n - 2) * s2a;
    rep.worst_id327 = std::max(rep.worst_id327, rel(r2, scale27));
}

void check_gamma2_algebra(Rng& rng, SymcheckReport& rep) {
    const int n = rng.uniform_int(2, 10);
    const LambdaVec lam = sample_gamma2_margin(rng, n);
    const double alpha = rng.uniform(-3.0, 2.0);

    const LambdaVec alam = abs_lambda(lam);
    const double l1a = std::abs(lam[0]);
    const double s1a = symfun::sigma(1, alam);
    const double s2a = symfun::sigma(2, alam);
    const double sum_a = (n - 1) * s1a;
    const double bracket_a = s1a * l1a + std::abs(alpha) * s2a;
    const double scale = l1a * l1a * (sum_a * sum_a + (n - 1) * (n - 1) * s1a * s1a) +
                         2.0 * bracket_a * l1a * sum_a + (n - 2) * bracket_a * bracket_a +
                         2.0 * (1.0 + std::abs(alpha)) * (n - 1) * s2a * l1a * l1a +
                         (n - 2) * alpha * alpha * s2a * s2a;
    rep.worst_coeff =
        std::max(rep.worst_coeff, rel(estimate::coeff_identity_residual(lam, alpha), scale));

    // the strict positivity claims, with the largest entry leading
    const LambdaVec sorted = max_first(lam);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 2; i <= n; ++i) {
        const double s = symfun::sigma_del(1, sorted, IndexSet(i));
        sum += s;
        sum_sq += s * s;
    }
    if (!(sum > 0.0)) rep.positivity_ok = false;
    if (!(sum * sum - (n - 2) * sum_sq > 0.0)) rep.positivity_ok = false;
}

void check_remark42(Rng& rng, SymcheckReport& rep) {
    const int n = rng.uniform_int(3, 10);
    const LambdaVec lam = max_first(sample_gamma2_margin(rng, n));
    const double b = rng.uniform(-3.0, 3.0);
    const double cap_c = rng.uniform(-3.0, 3.0);

    const double bound = estimate::remark42_bound(lam, b, cap_c);

    std::vector<double> a(static_cast<std::size_t>(n - 1));
    for (int i = 2; i <= n; ++i)
        a[static_cast<std::size_t>(i - 2)] = symfun::sigma_del(1, lam, IndexSet(i));
    const double total_c = symfun::sigma_del(1, lam, IndexSet(1)) * b + cap_c;
    const minval::MinProblem induced(n - 1, b, total_c, a);
    rep.worst_remark42 =
        std::max(rep.worst_remark42, rel_dev(bound, minval::min_value_closed_form(induced)));

    // lower-bound probes at random feasible points of the induced problem
    double qa = 0.0;
    for (double ai : a) qa += ai * ai;
    std::vector<double> x(a.size());
    for (int probe = 0; probe < 20; ++probe) {
        std::vector<double> z = rng.normal_vector(n - 1);
        double dot = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) dot += a[i] * z[i];
        const double t = rng.uniform(0.0, 3.0);
        for (std::size_t i = 0; i < z.size(); ++i)
            x[i] = -total_c * a[i] / qa + (z[i] - dot * a[i] / qa) * t;
        const double fx = minval::evaluate_f(induced, x);
        if (fx < bound - 1e-9 * (1.0 + std::abs(bound) + std::abs(fx)))
            rep.remark42_lb_violations++;
    }

    const estimate::Exploration ex = estimate::explore_k(lam, 2, b, cap_c);
    if (ex.value)
        rep.worst_explore2 = std::max(rep.worst_explore2, rel_dev(*ex.value, bound));
    else
        rep.worst_explore2 = std::numeric_limits<double>::infinity();
}

void check_point_problem(Rng& rng, SymcheckReport& rep) {
    const int n = rng.uniform_int(3, 10);
    const LambdaVec lam = sample_gamma2_margin(rng, n);
    std::vector<double> tangent(static_cast<std::size_t>(n)), grad(static_cast<std::size_t>(n));
    for (double& t : tangent) t = rng.uniform(-1.0, 1.0);
    for (double& g : grad) g = rng.uniform(-3.0, 3.0);
    const estimate::PointData pd(lam.values(), rng.uniform(-3.0, 3.0), rng.uniform(0.5, 2.0),
                                 tangent, rng.uniform(0.5, 3.0), grad, rng.uniform(-3.0, 2.0));

    const minval::MinProblem mp = estimate::build_point_problem(pd);
    if (minval::check_conditions(mp).cls != minval::Class::WellPosed)
        rep.point_wellposed_ok = false;
    else
        rep.worst_point_min =
            std::max(rep.worst_point_min,
                     rel_dev(estimate::sigma2_point_minimum(pd), minval::min_value_closed_form(mp)));
}

}  // namespace

SymcheckReport run_symcheck(const SymcheckOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("symcheck: trials must be >= 1");
    SymcheckReport rep;
    rep.seed = opt.seed;
    rep.trials = opt.trials;
    for (long long t = 0; t < opt.trials; ++t) {
        Rng rng = Rng::keyed(opt.seed, static_cast<std::uint64_t>(t));
        check_symfun_identities(rng, rep);
        check_gamma2_algebra(rng, rep);
        check_remark42(rng, rep);
        check_point_problem(rng, rep);
    }
    return rep;
}

std::string symcheck_report_to_json(const SymcheckReport& rep) {
    using io::fmt;
    return "{\"seed\":" + std::to_string(rep.seed) +
           ",\"trials\":" + std::to_string(rep.trials) +
           ",\"worst_sym31\":" + fmt(rep.worst_sym31) +
           ",\"worst_sym32\":" + fmt(rep.worst_sym32) +
           ",\"worst_sym33\":" + fmt(rep.worst_sym33) +
           ",\"worst_id326\":" + fmt(rep.worst_id326) +
           ",\"worst_id327\":" + fmt(rep.worst_id327) +
           ",\"worst_coeff\":" + fmt(rep.worst_coeff) +
           ",\"worst_remark42\":" + fmt(rep.worst_remark42) +
           ",\"worst_point_min\":" + fmt(rep.worst_point_min) +
           ",\"worst_explore2\":" + fmt(rep.worst_explore2) +
           ",\"remark42_lb_violations\":" + std::to_string(rep.remark42_lb_violations) +
           ",\"positivity_ok\":" + (rep.positivity_ok ? "true" : "false") +
           ",\"point_wellposed_ok\":" + (rep.point_wellposed_ok ? "true" : "false") +
           ",\"pass\":" + (rep.pass() ? "true" : "false") + "}";
}

namespace {

void explore_row(std::string& out, const LambdaVec& lam, int k, double b, double cap_c) {
    const estimate::Exploration ex = estimate::explore_k(lam, k, b, cap_c);
    out += std::to_string(lam.size()) + "," + std::to_string(k);
    for (int i = 0; i < lam.size(); ++i) out += "," + io::fmt(lam[i]);
    out += "," + io::fmt(b) + "," + io::fmt(cap_c) + "," + minval::to_string(ex.cls) + ",";
    out += ex.value ? io::fmt(*ex.value) : "nan";
    out += "\n";
}

}  // namespace

std::string run_explore_csv(const ExploreOptions& opt) {
    if (opt.n < 2) throw std::invalid_argument("explore: n must be >= 2");
    if (opt.k < 2) throw std::invalid_argument("explore: k must be >= 2");
    if (opt.k > opt.n) throw std::invalid_argument("explore: k must be <= n");
    if (opt.trials < 0) throw std::invalid_argument("explore: trials must be >= 0");

    std::string out = "n,k";
    for (int i = 1; i <= opt.n; ++i) out += ",lambda" + std::to_string(i);
    out += ",b,C,class,value\n";

    const LambdaVec ones(std::vector<double>(static_cast<std::size_t>(opt.n), 1.0));
    explore_row(out, ones, opt.k, 0.0, 0.0);
    explore_row(out, ones, opt.k, 1.0, 0.0);

    for (long long t = 0; t < opt.trials; ++t) {
        Rng rng = Rng::keyed(opt.seed, static_cast<std::uint64_t>(t));
        const LambdaVec lam = sample_gamma_k(rng, opt.n, opt.k);
        explore_row(out, lam, opt.k, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
    }
    return out;
}

}  // namespace s2m::suites
