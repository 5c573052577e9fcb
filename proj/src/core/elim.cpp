#include "core/elim.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace s2m::elim {

double objective(const Problem& p, const Eigen::VectorXd& x) {
    return 0.5 * x.dot(p.quad * x) + p.lin.dot(x) + p.offset;
}

Result minimize(const Problem& p) {
    const Eigen::Index n = p.normal.size();
    if (n < 1 || p.quad.rows() != n || p.quad.cols() != n || p.lin.size() != n)
        throw std::invalid_argument("elim: inconsistent problem dimensions");

    Eigen::Index pivot = 0;
    p.normal.cwiseAbs().maxCoeff(&pivot);
    const double ap = p.normal(pivot);
    if (ap == 0.0) throw std::invalid_argument("elim: constraint normal is zero");

    // x = B y + x0 parametrizes the constraint plane by the non-pivot variables
    const Eigen::Index m = n - 1;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, m);
    {
        Eigen::Index col = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == pivot) continue;
            basis(i, col) = 1.0;
            basis(pivot, col) = -p.normal(i) / ap;
            ++col;
        }
    }
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    x0(pivot) = -p.shift / ap;

    Result res;
    if (m == 0) {
        // constraint fixes the single variable
        res.cls = Classification::PositiveDefinite;
        res.minimizer = x0;
        res.value = objective(p, x0);
        return res;
    }

    const Eigen::MatrixXd hess = basis.transpose() * p.quad * basis;
    const Eigen::VectorXd grad = basis.transpose() * (p.quad * x0 + p.lin);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("elim: eigendecomposition failed");
    const Eigen::VectorXd& evals = es.eigenvalues();
    res.min_eigenvalue = evals(0);
    res.max_eigenvalue = evals(m - 1);

    const double tol = 1e-10 * evals.cwiseAbs().maxCoeff() + 1e-300;
    if (evals(0) > tol) {
        res.cls = Classification::PositiveDefinite;
        const Eigen::VectorXd y = es.eigenvectors() *
                                  (es.eigenvectors().transpose() * (-grad)).cwiseQuotient(evals);
        const Eigen::VectorXd x = basis * y + x0;
        res.minimizer = x;
        res.value = objective(p, x);
        return res;
    }
    if (evals(0) < -tol) {
        res.cls = Classification::Indefinite;
        return res;
    }
    // singular: bounded below iff the linear term has no component along the
    // null directions
    double null_resid = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
        if (std::abs(evals(i)) <= tol)
            null_resid = std::max(null_resid, std::abs(es.eigenvectors().col(i).dot(grad)));
    const double gtol = 1e-10 * (1.0 + grad.norm());
    res.cls = null_resid > gtol ? Classification::SingularInconsistent
                                : Classification::SingularConsistent;
    return res;
}

}  // namespace s2m::elim
