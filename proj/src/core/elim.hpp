#pragma once

#include <Eigen/Core>

#include <optional>

namespace s2m::elim {

/// minimize (1/2) x^T P x + q^T x + r  subject to  a^T x + c = 0.
struct Problem {
    Eigen::MatrixXd quad;    // P, symmetric
    Eigen::VectorXd lin;     // q
    double offset = 0.0;     // r
    Eigen::VectorXd normal;  // a, nonzero
    double shift = 0.0;      // c
};

enum class Classification {
    PositiveDefinite,     // unique minimizer on the constraint plane
    SingularConsistent,   // bounded below, minimum attained on an affine set
    SingularInconsistent, // linear term drives a null direction: unbounded
    Indefinite,           // negative curvature on the plane: unbounded
};

struct Result {
    Classification cls;
    std::optional<Eigen::VectorXd> minimizer;  // present iff PositiveDefinite
    std::optional<double> value;
    double min_eigenvalue = 0.0;  // of the reduced Hessian
    double max_eigenvalue = 0.0;
};

/// Eliminates the variable with the largest |a_j| through the constraint,
/// classifies the reduced Hessian by eigenvalue signs (tolerance
/// 1e-10 * ||H||), and solves the stationarity system when positive definite.
Result minimize(const Problem& p);

/// Objective of p evaluated directly (no constraint check).
double objective(const Problem& p, const Eigen::VectorXd& x);

}  // namespace s2m::elim
