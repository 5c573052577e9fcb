#pragma once

#include "core/minval.hpp"
#include "core/symfun.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace s2m::estimate {

/// Everything the point-wise estimate sees at one surface point: principal
/// curvatures, the third-derivative scalar h111, support <X,N>, tangential
/// position components <X,e_l>, the density varphi with its tangential
/// gradient, and the exponent alpha.
///
/// The curvature vector is not required to arrive sorted; construction swaps
/// the largest entry into slot 1 (together with the matching tangent and
/// gradient components, which live in the same frame) and records where it
/// came from.
class PointData {
public:
    PointData(std::vector<double> lambda, double h111, double support,
              std::vector<double> tangent, double varphi, std::vector<double> varphi_grad,
              double alpha);

    int n() const { return lam_.size(); }
    const symfun::LambdaVec& lam() const { return lam_; }
    double h111() const { return h111_; }
    double support() const { return support_; }
    const std::vector<double>& tangent() const { return tangent_; }
    double varphi() const { return varphi_; }
    const std::vector<double>& varphi_grad() const { return varphi_grad_; }
    double alpha() const { return alpha_; }
    /// 0-based slot the leading curvature occupied in the constructor input.
    int original_max_index() const { return original_max_index_; }

private:
    symfun::LambdaVec lam_;
    double h111_;
    double support_;
    std::vector<double> tangent_;
    double varphi_;
    std::vector<double> varphi_grad_;
    double alpha_;
    int original_max_index_;
};

/// The point-wise minimal value problem in the n-1 variables x_2..x_n:
/// a_i = sigma_1(lambda|i), b = h111, and
/// C = [sigma_1(lambda|1) lambda_1 - alpha sigma_2(lambda)] (h111/lambda_1)
///     - varphi_1 s^alpha,
/// with the critical-point relation <X,N>_1 = lambda_1 t_1 already folded in.
/// Needs n >= 3 so the result has at least two variables.
minval::MinProblem build_point_problem(const PointData& pd);

/// Residuals of the two sum identities
///   sum_{i>=2} sigma_1(lambda|i) = (n-2) sigma_1 + lambda_1
///   [sum_{i>=2} sigma_1(lambda|i)]^2 - (n-2) sum_{i>=2} sigma_1(lambda|i)^2
///       = (n-1) lambda_1^2 + 2(n-2) sigma_2.
/// Polynomial identities in the entries; lambda_1 is the first entry as given.
std::pair<double, double> identity_checks(const symfun::LambdaVec& lam);

/// |LHS - RHS| of the quadratic-coefficient identity
///   lambda_1^2 [S^2 - (n-1) Q] + 2 [sigma_1(lambda|1) lambda_1 - alpha sigma_2]
///       lambda_1 S - (n-2) [sigma_1(lambda|1) lambda_1 - alpha sigma_2]^2
///   = 2 (1-alpha)(n-1) sigma_2 lambda_1^2 - (n-2) alpha^2 sigma_2^2,
/// with S, Q the sum and square-sum of sigma_1(lambda|i), i >= 2.
double coeff_identity_residual(const symfun::LambdaVec& lam, double alpha);

/// Minimum of the point problem evaluated through the specialized form whose
/// denominator is 2[(n-1) lambda_1^2 + 2(n-2) sigma_2]. Defined for n >= 2.
double sigma2_point_minimum(const PointData& pd);

/// The sigma_2-convexity lower bound
///   [2(n-1) sigma_2 b^2 + 2(n-1) lambda_1 b C - (n-2) C^2]
///       / (2[(n-1) lambda_1^2 + 2(n-2) sigma_2])
/// for the problem with constraint constant sigma_1(lambda|1) b + C.
double remark42_bound(const symfun::LambdaVec& lam, double b, double cap_c);

/// Quadratic inequality lead * h^2 <= lin * h + konst and its largest root.
struct QuadBound {
    double lead;
    double lin;
    double konst;
    double h_bound;
};

/// Leading coefficient of the final curvature inequality:
///   alpha <= 1:            (2-alpha) varphi s^(alpha+1)
///   alpha in (1, 1+delta): (2-alpha)(1+delta-alpha) varphi s^(alpha-1) |X|^2
/// with |X|^2 = s^2 + sum t_l^2. The lower-order aggregates b1, b0 are
/// estimate constants supplied by the caller. Requires alpha < 1 + delta and
/// delta in (0, 1].
QuadBound final_bound(const PointData& pd, double delta, double b1, double b0);

struct Exploration {
    minval::Class cls;
    std::optional<double> value;
    std::optional<std::vector<double>> minimizer;
};

/// Numerically minimizes the sigma_k analogue
///   f_k(x_2..x_n) = -b sum_i sigma_{k-2}(lambda|1i) x_i
///                   - sum_{i<j} sigma_{k-2}(lambda|ij) x_i x_j
/// under sum_i sigma_{k-1}(lambda|i) x_i + [sigma_{k-1}(lambda|1) b + C] = 0
/// by constraint elimination. k = 2 reproduces the closed-form problem; for
/// k >= 3 no closed form is claimed, so this only reports what it finds.
Exploration explore_k(const symfun::LambdaVec& lam, int k, double b, double cap_c);

}  // namespace s2m::estimate
