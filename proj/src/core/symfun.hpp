#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

namespace s2m::symfun {

/// Eigenvalue / principal-curvature vector: at least two finite entries.
class LambdaVec {
public:
    explicit LambdaVec(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Zero, one or two distinct 1-based indices to delete from a vector.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int i);
    IndexSet(int i, int j);

    int size() const { return size_; }
    int operator[](int pos) const { return idx_[static_cast<std::size_t>(pos)]; }
    bool contains(int i) const;

private:
    std::array<int, 2> idx_{0, 0};
    int size_ = 0;
};

/// Coefficients e_0..e_m of prod_i (t + x_i), i.e. all elementary symmetric
/// functions of the entries, by the stable O(m^2) recurrence. Works for any
/// entry count including 0 and 1 (internal building block for deleted-index
/// evaluation, where sub-vectors can be short).
std::vector<double> esf_all(const std::vector<double>& entries);

/// sigma_k of a raw entry list; 1 for k == 0, 0 for k > size or k < 0.
double esf(int k, const std::vector<double>& entries);

/// sigma_k(lambda). Never enumerates monomials.
double sigma(int k, const LambdaVec& lam);

/// sigma_k of lambda with the excluded entries removed.
double sigma_del(int k, const LambdaVec& lam, const IndexSet& excl);

/// (sigma_{m-1}(lambda|1), ..., sigma_{m-1}(lambda|n)): the gradient of
/// sigma_m at a diagonal matrix with the given eigenvalues. 1 <= m <= n.
std::vector<double> sigma_grad(int m, const LambdaVec& lam);

/// sum_{i!=j} v_ij^2 - sum_{i!=j} v_ii v_jj for a symmetric matrix v: the
/// negated second-derivative contraction of sigma_2 against v.
double sigma2_hessian_quadform(const Eigen::MatrixXd& v);

/// Strict Garding-cone membership: sigma_i(lambda) > 0 for all 1 <= i <= k.
/// No tolerance; callers that need a margin enforce it when sampling.
bool in_gamma_k(const LambdaVec& lam, int k);

/// sigma_k(|lambda_1|, ..., |lambda_n|): every monomial taken with absolute
/// value. Used as the conditioning scale for identity residual tests.
double sigma_abs(int k, const LambdaVec& lam);

}  // namespace s2m::symfun
