#include "core/symfun.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace s2m::symfun {

LambdaVec::LambdaVec(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("LambdaVec: need at least 2 entries");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("LambdaVec: entries must be finite");
}

IndexSet::IndexSet(int i) : idx_{i, 0}, size_(1) {
    if (i < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
}

IndexSet::IndexSet(int i, int j) : idx_{std::min(i, j), std::max(i, j)}, size_(2) {
    if (i < 1 || j < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
    if (i == j) throw std::invalid_argument("IndexSet: duplicate index");
}

bool IndexSet::contains(int i) const {
    return (size_ > 0 && idx_[0] == i) || (size_ > 1 && idx_[1] == i);
}

std::vector<double> esf_all(const std::vector<double>& entries) {
    const std::size_t m = entries.size();
    std::vector<double> e(m + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        // highest degree first so e[j-1] still holds the previous sweep
        for (std::size_t j = i + 1; j >= 1; --j) e[j] += entries[i] * e[j - 1];
    }
    return e;
}

double esf(int k, const std::vector<double>& entries) {
    if (k < 0 || k > static_cast<int>(entries.size())) return 0.0;
    if (k == 0) return 1.0;
    return esf_all(entries)[static_cast<std::size_t>(k)];
}

double sigma(int k, const LambdaVec& lam) {
    if (k < 0) throw std::invalid_argument("sigma: k must be >= 0");
    return esf(k, lam.values());
}

namespace {

std::vector<double> drop_indices(const std::vector<double>& v, const IndexSet& excl) {
    const int n = static_cast<int>(v.size());
    for (int p = 0; p < excl.size(); ++p)
        if (excl[p] > n)
            throw std::invalid_argument("IndexSet: index " + std::to_string(excl[p]) +
                                        " out of range for n=" + std::to_string(n));
    std::vector<double> out;
    out.reserve(v.size());
    for (int i = 1; i <= n; ++i)
        if (!excl.contains(i)) out.push_back(v[static_cast<std::size_t>(i - 1)]);
    return out;
}

}  // namespace

double sigma_del(int k, const LambdaVec& lam, const IndexSet& excl) {
    if (k < 0) throw std::invalid_argument("sigma_del: k must be >= 0");
    return esf(k, drop_indices(lam.values(), excl));
}

std::vector<double> sigma_grad(int m, const LambdaVec& lam) {
    const int n = lam.size();
    if (m < 1 || m > n)
        throw std::invalid_argument("sigma_grad: m must satisfy 1 <= m <= n");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        out[static_cast<std::size_t>(i - 1)] = esf(m - 1, drop_indices(lam.values(), IndexSet(i)));
    return out;
}

double sigma2_hessian_quadform(const Eigen::MatrixXd& v) {
    if (v.rows() != v.cols())
        throw std::invalid_argument("sigma2_hessian_quadform: matrix must be square");
    const auto n = v.rows();
    const double tol = 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (std::abs(v(i, j) - v(j, i)) > tol)
                throw std::invalid_argument("sigma2_hessian_quadform: matrix must be symmetric");
    double off = 0.0, diag = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j) {
                off += v(i, j) * v(i, j);
                diag += v(i, i) * v(j, j);
            }
    return off - diag;
}

bool in_gamma_k(const LambdaVec& lam, int k) {
    const int n = lam.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("in_gamma_k: k must satisfy 1 <= k <= n");
    const std::vector<double> e = esf_all(lam.values());
    for (int i = 1; i <= k; ++i)
        if (!(e[static_cast<std::size_t>(i)] > 0.0)) return false;
    return true;
}

double sigma_abs(int k, const LambdaVec& lam) {
    std::vector<double> a(lam.values());
    for (double& x : a) x = std::abs(x);
    return esf(k, a);
}

}  // namespace s2m::symfun
