#include "core/estimate.hpp"

#include <cmath>
#include <stdexcept>

namespace s2m::estimate {

using symfun::IndexSet;
using symfun::LambdaVec;

namespace {

std::vector<double> swapped_to_front(std::vector<double> v, std::size_t idx) {
    if (idx != 0) std::swap(v[0], v[idx]);
    return v;
}

}  // namespace

PointData::PointData(std::vector<double> lambda, double h111, double support,
                     std::vector<double> tangent, double varphi,
                     std::vector<double> varphi_grad, double alpha)
    : lam_(std::vector<double>{0.0, 0.0}),  // replaced below
      h111_(h111),
      support_(support),
      tangent_(std::move(tangent)),
      varphi_(varphi),
      varphi_grad_(std::move(varphi_grad)),
      alpha_(alpha),
      original_max_index_(0) {
    const std::size_t n = lambda.size();
    if (tangent_.size() != n || varphi_grad_.size() != n)
        throw std::invalid_argument("PointData: tangent and varphi_grad must have n entries");
    if (!(support_ > 0.0)) throw std::invalid_argument("PointData: support must be > 0");
    if (!(varphi_ > 0.0)) throw std::invalid_argument("PointData: varphi must be > 0");
    if (!std::isfinite(h111_) || !std::isfinite(alpha_))
        throw std::invalid_argument("PointData: h111 and alpha must be finite");

    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (lambda[i] > lambda[arg]) arg = i;
    original_max_index_ = static_cast<int>(arg);
    lam_ = LambdaVec(swapped_to_front(std::move(lambda), arg));
    tangent_ = swapped_to_front(std::move(tangent_), arg);
    varphi_grad_ = swapped_to_front(std::move(varphi_grad_), arg);

    if (!symfun::in_gamma_k(lam_, 2))
        throw std::invalid_argument("PointData: lambda must lie in Gamma_2");
}

minval::MinProblem build_point_problem(const PointData& pd) {
    const int n = pd.n();
    if (n < 3)
        throw std::invalid_argument(
            "build_point_problem: need n >= 3 (the point problem has n-1 variables)");
    const LambdaVec& lam = pd.lam();
    const double l1 = lam[0];
    if (l1 == 0.0) throw std::invalid_argument("build_point_problem: lambda_1 must be nonzero");

    std::vector<double> a(static_cast<std::size_t>(n - 1));
    for (int i = 2; i <= n; ++i)
        a[static_cast<std::size_t>(i - 2)] = symfun::sigma_del(1, lam, IndexSet(i));

    const double s1_del1 = symfun::sigma_del(1, lam, IndexSet(1));
    const double s2 = symfun::sigma(2, lam);
    const double s_alpha = std::pow(pd.support(), pd.alpha());
    const double cap_c =
        (s1_del1 * l1 - pd.alpha() * s2) * (pd.h111() / l1) - pd.varphi_grad()[0] * s_alpha;

    return minval::MinProblem(n - 1, pd.h111(), cap_c, std::move(a));
}

namespace {

struct DeletedSums {
    double sum;     // S  = sum_{i>=2} sigma_1(lambda|i)
    double sum_sq;  // Q  = sum_{i>=2} sigma_1(lambda|i)^2
};

DeletedSums deleted_sums(const LambdaVec& lam) {
    DeletedSums ds{0.0, 0.0};
    for (int i = 2; i <= lam.size(); ++i) {
        const double s = symfun::sigma_del(1, lam, IndexSet(i));
        ds.sum += s;
        ds.sum_sq += s * s;
    }
    return ds;
}

}  // namespace

std::pair<double, double> identity_checks(const LambdaVec& lam) {
    const int n = lam.size();
    const double l1 = lam[0];
    const DeletedSums ds = deleted_sums(lam);
    const double s1 = symfun::sigma(1, lam);
    const double s2 = symfun::sigma(2, lam);
    const double r1 = std::abs(ds.sum - ((n - 2) * s1 + l1));
    const double r2 =
        std::abs(ds.sum * ds.sum - (n - 2) * ds.sum_sq - ((n - 1) * l1 * l1 + 2 * (n - 2) * s2));
    return {r1, r2};
}

double coeff_identity_residual(const LambdaVec& lam, double alpha) {
    const int n = lam.size();
    const double l1 = lam[0];
    const DeletedSums ds = deleted_sums(lam);
    const double s1_del1 = symfun::sigma_del(1, lam, IndexSet(1));
    const double s2 = symfun::sigma(2, lam);
    const double bracket = s1_del1 * l1 - alpha * s2;
    const double lhs = l1 * l1 * (ds.sum * ds.sum - (n - 1) * ds.sum_sq) +
                       2.0 * bracket * l1 * ds.sum - (n - 2) * bracket * bracket;
    const double rhs =
        2.0 * (1.0 - alpha) * (n - 1) * s2 * l1 * l1 - (n - 2) * alpha * alpha * s2 * s2;
    return std::abs(lhs - rhs);
}

double sigma2_point_minimum(const PointData& pd) {
    const int n = pd.n();
    const LambdaVec& lam = pd.lam();
    const double l1 = lam[0];
    if (l1 == 0.0) throw std::invalid_argument("sigma2_point_minimum: lambda_1 must be nonzero");
    const DeletedSums ds = deleted_sums(lam);
    const double s1_del1 = symfun::sigma_del(1, lam, IndexSet(1));
    const double s2 = symfun::sigma(2, lam);
    const double s_alpha = std::pow(pd.support(), pd.alpha());
    const double b = pd.h111();
    const double cap_c =
        (s1_del1 * l1 - pd.alpha() * s2) * (pd.h111() / l1) - pd.varphi_grad()[0] * s_alpha;
    const double num = b * b * (ds.sum * ds.sum - (n - 1) * ds.sum_sq) +
                       2.0 * b * cap_c * ds.sum - (n - 2) * cap_c * cap_c;
    const double den = 2.0 * ((n - 1) * l1 * l1 + 2.0 * (n - 2) * s2);
    return num / den;
}

double remark42_bound(const LambdaVec& lam, double b, double cap_c) {
    const int n = lam.size();
    const double l1 = lam[0];
    const double s2 = symfun::sigma(2, lam);
    const double num = 2.0 * (n - 1) * s2 * b * b + 2.0 * (n - 1) * l1 * b * cap_c -
                       (n - 2) * cap_c * cap_c;
    const double den = 2.0 * ((n - 1) * l1 * l1 + 2.0 * (n - 2) * s2);
    return num / den;
}

QuadBound final_bound(const PointData& pd, double delta, double b1, double b0) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("final_bound: delta must lie in (0, 1]");
    const double alpha = pd.alpha();
    if (!(alpha < 1.0 + delta))
        throw std::domain_error("final_bound: alpha must be < 1 + delta");

    const double s = pd.support();
    double lead;
    if (alpha <= 1.0) {
        lead = (2.0 - alpha) * pd.varphi() * std::pow(s, alpha + 1.0);
    } else {
        double x2 = s * s;
        for (double t : pd.tangent()) x2 += t * t;
        lead = (2.0 - alpha) * (1.0 + delta - alpha) * pd.varphi() * std::pow(s, alpha - 1.0) * x2;
    }
    const double disc = b1 * b1 + 4.0 * lead * b0;
    if (disc < 0.0)
        throw std::domain_error("final_bound: inequality is infeasible (negative discriminant)");
    QuadBound qb{lead, b1, b0, 0.0};
    qb.h_bound = (b1 + std::sqrt(disc)) / (2.0 * lead);
    return qb;
}

Exploration explore_k(const LambdaVec& lam, int k, double b, double cap_c) {
    const int n = lam.size();
    if (k < 2) throw std::invalid_argument("explore_k: k must be >= 2");
    if (k > n) throw std::invalid_argument("explore_k: k must be <= n");
    if (!symfun::in_gamma_k(lam, k))
        throw std::invalid_argument("explore_k: lambda must lie in Gamma_k");

    const int m = n - 1;  // variables x_2..x_n
    elim::Problem ep;
    ep.quad = Eigen::MatrixXd::Zero(m, m);
    ep.lin = Eigen::VectorXd::Zero(m);
    ep.normal = Eigen::VectorXd::Zero(m);
    ep.offset = 0.0;
    for (int s = 0; s < m; ++s) {
        const int i = s + 2;
        ep.lin(s) = -b * symfun::sigma_del(k - 2, lam, IndexSet(1, i));
        ep.normal(s) = symfun::sigma_del(k - 1, lam, IndexSet(i));
        for (int t = s + 1; t < m; ++t) {
            const int j = t + 2;
            const double c = -symfun::sigma_del(k - 2, lam, IndexSet(i, j));
            ep.quad(s, t) = c;
            ep.quad(t, s) = c;
        }
    }
    ep.shift = symfun::sigma_del(k - 1, lam, IndexSet(1)) * b + cap_c;

    const elim::Result r = elim::minimize(ep);
    Exploration out;
    out.cls = minval::classify(r.cls);
    if (r.minimizer) {
        out.value = r.value;
        out.minimizer = std::vector<double>(r.minimizer->data(),
                                            r.minimizer->data() + r.minimizer->size());
    }
    return out;
}

}  // namespace s2m::estimate
