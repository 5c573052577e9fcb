#pragma once

#include <Eigen/Core>

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace s2m::geomkit {

/// One surface point of a star-shaped hypersurface in R^3 with its outer
/// normal, principal curvatures (kappa1 >= kappa2, sign convention: unit
/// sphere has kappa = +1), support <X,N> and squared radius.
struct SurfaceSample {
    double theta = 0.0;
    double phi = 0.0;
    Eigen::Vector3d position{0.0, 0.0, 0.0};
    Eigen::Vector3d normal{0.0, 0.0, 0.0};
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double support = 0.0;
    double radius2 = 0.0;
};

struct SurfaceReport {
    std::size_t n_samples = 0;
    double delta = 0.0;      // min <X,N>^2 / |X|^2
    double sup_kappa = 0.0;  // max kappa1
    double min_sigma2 = 0.0;
    double min_support = 0.0;
    bool two_convex = false;
};

struct EllipsoidSpec {
    std::array<double, 3> axes{1.0, 1.0, 1.0};
    int n_theta = 64;
    int n_phi = 128;
};

/// rho sampled on the offset lat-long grid theta_j = (j+1/2) pi / n_theta,
/// phi_i = 2 pi i / n_phi (azimuth periodic; poles never hit).
class RadialGrid {
public:
    RadialGrid(int n_theta, int n_phi, std::vector<double> rho);  // row-major
    static RadialGrid from_function(int n_theta, int n_phi,
                                    const std::function<double(double, double)>& rho);

    int n_theta() const { return nt_; }
    int n_phi() const { return np_; }
    double theta(int j) const;
    double phi(int i) const;
    double rho(int j, int i) const { return rho_[static_cast<std::size_t>(j * np_ + i)]; }
    const std::vector<double>& data() const { return rho_; }

private:
    int nt_, np_;
    std::vector<double> rho_;
};

using SurfaceSpec = std::variant<EllipsoidSpec, RadialGrid>;

class NotTwoConvex : public std::runtime_error {
public:
    NotTwoConvex(std::size_t sample, double sigma2);
    std::size_t sample_index;
};

class GridError : public std::runtime_error {
public:
    GridError(int row, int col, const std::string& what);
    int row, col;
};

/// Analytic ellipsoid point at parameter (theta, phi) of the standard
/// parametrization (a sin cos, b sin sin, c cos); all derivatives closed-form.
SurfaceSample ellipsoid_sample_at(const std::array<double, 3>& axes, double theta, double phi);

/// Analytic ellipsoid point hit by the ray from the origin along u.
SurfaceSample ellipsoid_sample_at_direction(const std::array<double, 3>& axes,
                                            const Eigen::Vector3d& u);

std::vector<SurfaceSample> ellipsoid_samples(const std::array<double, 3>& axes, int n_theta,
                                             int n_phi);

/// Radial profile rho(u) = 1/sqrt(sum (u_i/axis_i)^2) sampled on the grid.
RadialGrid ellipsoid_radial_grid(const std::array<double, 3>& axes, int n_theta, int n_phi);

/// Samples X = rho u with fundamental forms from 2nd-order finite differences
/// of rho (centered, periodic in azimuth, one-sided at the boundary colatitude
/// rows); the angular factors are differentiated exactly. Output ordered by
/// (row, column).
std::vector<SurfaceSample> radial_grid_samples(const RadialGrid& grid);

/// phi = sigma_2(kappa) / <X,N>^alpha per sample; the density that makes the
/// surface an exact solution of the prescribed-curvature equation.
std::vector<double> inverse_phi(const std::vector<SurfaceSample>& samples, double alpha);

struct GridPhi {
    std::vector<double> phi;
    std::vector<std::array<double, 2>> grad;  // tangential derivative along principal directions
    std::vector<Eigen::Vector3d> dir1, dir2;  // the frame the components refer to
};

GridPhi inverse_phi_with_gradient(const RadialGrid& grid, double alpha);

SurfaceReport aggregate(const std::vector<SurfaceSample>& samples);

/// Max symmetrized covariant-derivative residual of the second fundamental
/// form over interior rows; a pure discretization diagnostic that must vanish
/// at O(h^2).
double codazzi_residual(const RadialGrid& grid);

/// Max residual of <X_a, D_b N> against h_ab over interior rows, with D_b N
/// from finite differences of the computed normal field.
double weingarten_residual(const RadialGrid& grid);

std::vector<SurfaceSample> samples_for(const SurfaceSpec& spec);

}  // namespace s2m::geomkit
