#include "core/minval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace s2m::minval {

MinProblem::MinProblem(int n, double b_, double cap_c_, std::vector<double> a_)
    : dim(n), b(b_), cap_c(cap_c_), a(std::move(a_)) {
    if (dim < 2) throw std::invalid_argument("MinProblem: N must be >= 2");
    if (static_cast<int>(a.size()) != dim)
        throw std::invalid_argument("MinProblem: a must have N entries");
    if (!std::isfinite(b) || !std::isfinite(cap_c))
        throw std::invalid_argument("MinProblem: coefficients must be finite");
    double norm2 = 0.0;
    for (double ai : a) {
        if (!std::isfinite(ai)) throw std::invalid_argument("MinProblem: a must be finite");
        norm2 += ai * ai;
    }
    if (norm2 == 0.0) throw std::invalid_argument("MinProblem: a must be nonzero");
}

double MinProblem::sum_a() const { return std::accumulate(a.begin(), a.end(), 0.0); }

double MinProblem::sum_a_sq() const {
    double s = 0.0;
    for (double ai : a) s += ai * ai;
    return s;
}

const char* to_string(Class c) {
    switch (c) {
        case Class::WellPosed: return "WellPosed";
        case Class::DegenerateBounded: return "DegenerateBounded";
        case Class::DegenerateUnbounded: return "DegenerateUnbounded";
        case Class::Unbounded: return "Unbounded";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::EigenDecomp: return "EigenDecomp";
        case Method::Lagrange: return "Lagrange";
        case Method::Oracle: return "Oracle";
    }
    return "?";
}

NotWellPosed::NotWellPosed(const Wellposedness& wp)
    : std::runtime_error(std::string("problem is not well-posed: class ") + to_string(wp.cls)),
      wellposedness(wp) {}

Class classify(elim::Classification c) {
    switch (c) {
        case elim::Classification::PositiveDefinite: return Class::WellPosed;
        case elim::Classification::SingularConsistent: return Class::DegenerateBounded;
        case elim::Classification::SingularInconsistent: return Class::DegenerateUnbounded;
        case elim::Classification::Indefinite: return Class::Unbounded;
    }
    return Class::Unbounded;
}

elim::Problem elim_form(const MinProblem& p) {
    const int n = p.dim;
    elim::Problem ep;
    ep.quad = Eigen::MatrixXd::Constant(n, n, -1.0);
    ep.quad.diagonal().setZero();
    ep.lin = Eigen::VectorXd::Constant(n, -p.b);
    ep.offset = 0.0;
    ep.normal = Eigen::Map<const Eigen::VectorXd>(p.a.data(), n);
    ep.shift = p.cap_c;
    return ep;
}

Wellposedness check_conditions(const MinProblem& p) {
    const int n = p.dim;
    const double sa = p.sum_a();
    const double qa = p.sum_a_sq();
    const double disc = sa * sa - (n - 1) * qa;
    const double tol = 1e-12 * qa;
    Wellposedness wp{disc, Class::WellPosed};
    if (disc > tol) {
        wp.cls = Class::WellPosed;
    } else if (disc < -tol) {
        wp.cls = Class::Unbounded;
    } else {
        // inside the band the restricted quadratic has a null direction;
        // split on whether the reduced linear term drives it
        const elim::Result r = elim::minimize(elim_form(p));
        const bool bounded = r.cls == elim::Classification::PositiveDefinite ||
                             r.cls == elim::Classification::SingularConsistent;
        wp.cls = bounded ? Class::DegenerateBounded : Class::DegenerateUnbounded;
    }
    return wp;
}

double evaluate_f(const MinProblem& p, std::span<const double> x) {
    if (static_cast<int>(x.size()) != p.dim)
        throw std::invalid_argument("evaluate_f: x must have N entries");
    double lin = 0.0;
    for (double xi : x) lin += xi;
    double quad = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) quad += x[i] * x[j];
    return -p.b * lin - quad;
}

namespace {

Wellposedness require_wellposed(const MinProblem& p) {
    const Wellposedness wp = check_conditions(p);
    if (wp.cls != Class::WellPosed) throw NotWellPosed(wp);
    return wp;
}

// mu from the stationarity row with the largest |a_i|; used to attach a
// multiplier to solutions that were not produced by the Lagrange route
double multiplier_from_stationarity(const MinProblem& p, const std::vector<double>& x) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < p.a.size(); ++i)
        if (std::abs(p.a[i]) > std::abs(p.a[pivot])) pivot = i;
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    return (p.b + total - x[pivot]) / p.a[pivot];
}

}  // namespace

double min_value_closed_form(const MinProblem& p) {
    require_wellposed(p);
    const int n = p.dim;
    const double sa = p.sum_a();
    const double qa = p.sum_a_sq();
    const double num =
        p.b * p.b * (sa * sa - n * qa) + 2.0 * p.b * p.cap_c * sa - (n - 1) * p.cap_c * p.cap_c;
    const double den = 2.0 * (sa * sa - (n - 1) * qa);
    return num / den;
}

SpectralData spectral_data(const MinProblem& p) {
    const int n = p.dim;
    const double sa = p.sum_a();
    const double qa = p.sum_a_sq();
    const double mean = sa / n;
    SpectralData sd;
    sd.e_n.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    double d2 = 0.0;
    for (double ai : p.a) d2 += (ai - mean) * (ai - mean);
    sd.d = std::sqrt(std::max(d2, 0.0));
    const double d_tol = 1e-10 * std::sqrt(qa);
    if (sd.d > d_tol) {
        sd.e_1.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            sd.e_1[static_cast<std::size_t>(i)] = (p.a[static_cast<std::size_t>(i)] - mean) / sd.d;
    }
    return sd;
}

MinSolution solve_eigendecomp(const MinProblem& p) {
    require_wellposed(p);
    const int n = p.dim;
    const double sa = p.sum_a();
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const SpectralData sd = spectral_data(p);

    std::vector<double> x(static_cast<std::size_t>(n));
    if (sd.e_1.empty()) {
        // a is (numerically) a multiple of (1,...,1): the constraint pins the
        // e_N component and everything else vanishes at the minimum
        const double xn = -p.cap_c / (sqrt_n * p.a[0]);
        for (double& xi : x) xi = xn / sqrt_n;
    } else {
        const double d = sd.d;
        const double den = sa * sa - (n - 1) * n * d * d;  // = N * D
        const double xn = -sqrt_n * (sa * p.cap_c - n * p.b * d * d) / den;
        // <x,e_1> comes from the constraint row; the raw form
        // -(sa/(sqrt(N) d)) <x,e_N> - C/d cancels catastrophically as d -> 0,
        // so evaluate its exact simplification instead
        const double x1 = n * d * ((n - 1) * p.cap_c - p.b * sa) / den;
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] = xn / sqrt_n + x1 * sd.e_1[static_cast<std::size_t>(i)];
    }
    MinSolution sol;
    sol.minimizer = std::move(x);
    sol.value = evaluate_f(p, sol.minimizer);
    sol.multiplier = multiplier_from_stationarity(p, sol.minimizer);
    sol.method = Method::EigenDecomp;
    return sol;
}

MinSolution solve_lagrange(const MinProblem& p) {
    const Wellposedness wp = require_wellposed(p);
    const int n = p.dim;
    const double sa = p.sum_a();
    const double mu = (p.b * sa - (n - 1) * p.cap_c) / wp.discriminant;
    MinSolution sol;
    sol.minimizer.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sol.minimizer[static_cast<std::size_t>(i)] =
            -p.b / (n - 1) + mu * sa / (n - 1) - mu * p.a[static_cast<std::size_t>(i)];
    sol.value = evaluate_f(p, sol.minimizer);
    sol.multiplier = mu;
    sol.method = Method::Lagrange;
    return sol;
}

OracleOutcome oracle_minimize(const MinProblem& p) {
    const elim::Result r = elim::minimize(elim_form(p));
    OracleOutcome out;
    out.cls = classify(r.cls);
    if (r.cls == elim::Classification::PositiveDefinite) {
        MinSolution sol;
        sol.minimizer.assign(r.minimizer->data(), r.minimizer->data() + r.minimizer->size());
        sol.value = evaluate_f(p, sol.minimizer);
        sol.multiplier = multiplier_from_stationarity(p, sol.minimizer);
        sol.method = Method::Oracle;
        out.solution = std::move(sol);
    }
    return out;
}

MinProblem sample_wellposed(Rng& rng, int n_min, int n_max) {
    const int n = rng.uniform_int(n_min, n_max);
    const double s = rng.uniform(0.5, 2.0);
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const std::vector<double> u = rng.unit_vector(n);
    std::vector<double> a(static_cast<std::size_t>(n));
    double shrink = 1.0;
    for (;;) {
        const double tau = shrink * rng.uniform(0.0, s);
        double sa = 0.0, qa = 0.0;
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = sign * s + tau * u[static_cast<std::size_t>(i)];
            sa += a[static_cast<std::size_t>(i)];
            qa += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
        }
        if (sa * sa - (n - 1) * qa > 0.05 * qa) break;
        shrink *= 0.5;  // tau = 0 always lands inside, so this terminates
    }
    const double b = rng.uniform(-10.0, 10.0);
    const double cap_c = rng.uniform(-10.0, 10.0);
    return MinProblem(n, b, cap_c, std::move(a));
}

namespace {

double rel_dev(double x, double y) { return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y))); }

double minimizer_dev(const std::vector<double>& x, const std::vector<double>& y) {
    double norm = 0.0;
    for (double v : x) norm = std::max(norm, std::abs(v));
    for (double v : y) norm = std::max(norm, std::abs(v));
    double dev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
    return dev / (1.0 + norm);
}

double constraint_residual(const MinProblem& p, const std::vector<double>& x) {
    double r = p.cap_c, anorm = 0.0, xnorm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r += p.a[i] * x[i];
        anorm += p.a[i] * p.a[i];
        xnorm += x[i] * x[i];
    }
    return std::abs(r) / (1.0 + std::abs(p.cap_c) + std::sqrt(anorm) * std::sqrt(xnorm));
}

// projection of z onto the constraint plane's direction space (z - (a.z/|a|^2) a)
std::vector<double> project_tangent(const MinProblem& p, std::vector<double> z) {
    double dot = 0.0, qa = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        dot += p.a[i] * z[i];
        qa += p.a[i] * p.a[i];
    }
    const double f = dot / qa;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= f * p.a[i];
    return z;
}

struct ShardAccum {
    FuzzReport rep;

    // trials arrive in ascending order, so ties keep the earliest instance
    void note_value_dev(long long trial, const MinProblem& p, double vdev) {
        if (!rep.worst || vdev > rep.max_value_dev) {
            rep.worst = p;
            rep.worst_trial = trial;
        }
        rep.max_value_dev = std::max(rep.max_value_dev, vdev);
    }

    void absorb_trial(long long trial, const FuzzOptions& opt) {
        Rng rng = Rng::keyed(opt.seed, static_cast<std::uint64_t>(trial));
        const MinProblem p = sample_wellposed(rng, opt.n_min, opt.n_max);
        if (p.sum_a() == 0.0) rep.implication_violations++;

        const double v_cf = min_value_closed_form(p);
        const MinSolution se = solve_eigendecomp(p);
        const MinSolution sl = solve_lagrange(p);
        const OracleOutcome oo = oracle_minimize(p);
        if (!oo.solution) {
            // oracle disagrees with the discriminant on well-posedness
            note_value_dev(trial, p, std::numeric_limits<double>::infinity());
            return;
        }
        const MinSolution& so = *oo.solution;

        double vdev = 0.0;
        const double vals[4] = {v_cf, se.value, sl.value, so.value};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) vdev = std::max(vdev, rel_dev(vals[i], vals[j]));
        note_value_dev(trial, p, vdev);

        rep.max_minimizer_dev = std::max({rep.max_minimizer_dev,
                                          minimizer_dev(se.minimizer, sl.minimizer),
                                          minimizer_dev(se.minimizer, so.minimizer),
                                          minimizer_dev(sl.minimizer, so.minimizer)});
        const double mus[3] = {se.multiplier, sl.multiplier, so.multiplier};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                rep.max_multiplier_dev = std::max(rep.max_multiplier_dev, rel_dev(mus[i], mus[j]));
        rep.max_constraint_residual = std::max({rep.max_constraint_residual,
                                                constraint_residual(p, se.minimizer),
                                                constraint_residual(p, sl.minimizer),
                                                constraint_residual(p, so.minimizer)});

        // lower-bound probes: feasible points never dip below the minimum
        double xnorm = 0.0;
        for (double v : sl.minimizer) xnorm = std::max(xnorm, std::abs(v));
        std::vector<double> x(sl.minimizer.size());
        for (int k = 0; k < opt.feasible_samples; ++k) {
            const std::vector<double> v = project_tangent(p, rng.normal_vector(p.dim));
            const double t = rng.uniform(0.0, 3.0);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = sl.minimizer[i] + t * v[i];
            const double fx = evaluate_f(p, x);
            if (fx < sl.value - 1e-9 * (1.0 + std::abs(sl.value))) rep.lower_bound_violations++;
        }

        // strict local minimality along feasible directions
        const double eps = 1e-3;
        for (int k = 0; k < opt.direction_samples; ++k) {
            std::vector<double> v = project_tangent(p, rng.normal_vector(p.dim));
            double vn = 0.0;
            for (double c : v) vn += c * c;
            vn = std::sqrt(vn);
            if (vn < 1e-12) continue;
            const double scale = (1.0 + xnorm) / vn;
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = sl.minimizer[i] + eps * scale * v[i];
            if (!(evaluate_f(p, x) > sl.value)) rep.uniqueness_violations++;
        }
    }

    void merge(const ShardAccum& o) {
        rep.max_minimizer_dev = std::max(rep.max_minimizer_dev, o.rep.max_minimizer_dev);
        rep.max_multiplier_dev = std::max(rep.max_multiplier_dev, o.rep.max_multiplier_dev);
        rep.max_constraint_residual =
            std::max(rep.max_constraint_residual, o.rep.max_constraint_residual);
        rep.lower_bound_violations += o.rep.lower_bound_violations;
        rep.uniqueness_violations += o.rep.uniqueness_violations;
        rep.implication_violations += o.rep.implication_violations;
        if (o.rep.max_value_dev > rep.max_value_dev ||
            (o.rep.max_value_dev == rep.max_value_dev && o.rep.worst &&
             (!rep.worst || o.rep.worst_trial < rep.worst_trial))) {
            rep.max_value_dev = o.rep.max_value_dev;
            rep.worst = o.rep.worst;
            rep.worst_trial = o.rep.worst_trial;
        }
    }
};

}  // namespace

FuzzReport fuzz_compare(const FuzzOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("fuzz_compare: trials must be >= 1");
    if (opt.n_min < 2 || opt.n_max < opt.n_min)
        throw std::invalid_argument("fuzz_compare: bad n range");

    const int shards = std::max(1, opt.shards);
    std::vector<ShardAccum> acc(static_cast<std::size_t>(shards));
    if (shards == 1) {
        for (long long t = 0; t < opt.trials; ++t) acc[0].absorb_trial(t, opt);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (opt.trials + shards - 1) / shards;
        for (int s = 0; s < shards; ++s) {
            const long long lo = s * chunk;
            const long long hi = std::min(opt.trials, lo + chunk);
            pool.emplace_back([&acc, s, lo, hi, &opt] {
                for (long long t = lo; t < hi; ++t)
                    acc[static_cast<std::size_t>(s)].absorb_trial(t, opt);
            });
        }
        for (auto& th : pool) th.join();
    }
    ShardAccum total;
    for (const ShardAccum& a : acc) total.merge(a);
    total.rep.seed = opt.seed;
    total.rep.trials = opt.trials;
    total.rep.n_min = opt.n_min;
    total.rep.n_max = opt.n_max;
    return total.rep;
}

}  // namespace s2m::minval
