#include "core/geomkit.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace s2m::geomkit {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

RadialGrid::RadialGrid(int n_theta, int n_phi, std::vector<double> rho)
    : nt_(n_theta), np_(n_phi), rho_(std::move(rho)) {
    if (nt_ < 8) throw std::invalid_argument("RadialGrid: n_theta must be >= 8");
    if (np_ < 16) throw std::invalid_argument("RadialGrid: n_phi must be >= 16");
    if (rho_.size() != static_cast<std::size_t>(nt_) * static_cast<std::size_t>(np_))
        throw std::invalid_argument("RadialGrid: rho must have n_theta * n_phi entries");
    for (double r : rho_)
        if (!(std::isfinite(r) && r > 0.0))
            throw std::invalid_argument("RadialGrid: rho must be positive and finite");
}

RadialGrid RadialGrid::from_function(int n_theta, int n_phi,
                                     const std::function<double(double, double)>& rho) {
    std::vector<double> data(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    for (int j = 0; j < n_theta; ++j) {
        const double th = (j + 0.5) * kPi / n_theta;
        for (int i = 0; i < n_phi; ++i)
            data[static_cast<std::size_t>(j * n_phi + i)] = rho(th, 2.0 * kPi * i / n_phi);
    }
    return RadialGrid(n_theta, n_phi, std::move(data));
}

double RadialGrid::theta(int j) const { return (j + 0.5) * kPi / nt_; }

double RadialGrid::phi(int i) const { return 2.0 * kPi * i / np_; }

NotTwoConvex::NotTwoConvex(std::size_t sample, double sigma2)
    : std::runtime_error("surface is not 2-convex at sample " + std::to_string(sample) +
                         ": sigma2 = " + std::to_string(sigma2)),
      sample_index(sample) {}

GridError::GridError(int row_, int col_, const std::string& what)
    : std::runtime_error("grid sample (" + std::to_string(row_) + ", " + std::to_string(col_) +
                         "): " + what),
      row(row_),
      col(col_) {}

namespace {

// ---- finite differences on grid scalar fields (row-major [nt][np]) ----

class Field {
public:
    Field(int nt, int np) : nt_(nt), np_(np), v_(static_cast<std::size_t>(nt) * np) {}
    Field(int nt, int np, std::vector<double> v) : nt_(nt), np_(np), v_(std::move(v)) {}

    double& at(int j, int i) { return v_[static_cast<std::size_t>(j * np_ + i)]; }
    double at(int j, int i) const { return v_[static_cast<std::size_t>(j * np_ + i)]; }
    int nt() const { return nt_; }
    int np() const { return np_; }

private:
    int nt_, np_;
    std::vector<double> v_;
};

// first derivative in colatitude: centered inside, 3-point one-sided at the
// boundary rows (both 2nd order)
Field d_theta(const Field& f, double h) {
    Field out(f.nt(), f.np());
    const int nt = f.nt(), np = f.np();
    for (int i = 0; i < np; ++i) {
        out.at(0, i) = (-3.0 * f.at(0, i) + 4.0 * f.at(1, i) - f.at(2, i)) / (2.0 * h);
        out.at(nt - 1, i) =
            (3.0 * f.at(nt - 1, i) - 4.0 * f.at(nt - 2, i) + f.at(nt - 3, i)) / (2.0 * h);
        for (int j = 1; j < nt - 1; ++j)
            out.at(j, i) = (f.at(j + 1, i) - f.at(j - 1, i)) / (2.0 * h);
    }
    return out;
}

// second derivative in colatitude: 4-point one-sided stencils at the boundary
Field d_theta_theta(const Field& f, double h) {
    Field out(f.nt(), f.np());
    const int nt = f.nt(), np = f.np();
    const double h2 = h * h;
    for (int i = 0; i < np; ++i) {
        out.at(0, i) =
            (2.0 * f.at(0, i) - 5.0 * f.at(1, i) + 4.0 * f.at(2, i) - f.at(3, i)) / h2;
        out.at(nt - 1, i) = (2.0 * f.at(nt - 1, i) - 5.0 * f.at(nt - 2, i) +
                             4.0 * f.at(nt - 3, i) - f.at(nt - 4, i)) /
                            h2;
        for (int j = 1; j < nt - 1; ++j)
            out.at(j, i) = (f.at(j + 1, i) - 2.0 * f.at(j, i) + f.at(j - 1, i)) / h2;
    }
    return out;
}

Field d_phi(const Field& f, double h) {
    Field out(f.nt(), f.np());
    const int nt = f.nt(), np = f.np();
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < np; ++i)
            out.at(j, i) = (f.at(j, (i + 1) % np) - f.at(j, (i + np - 1) % np)) / (2.0 * h);
    return out;
}

Field d_phi_phi(const Field& f, double h) {
    Field out(f.nt(), f.np());
    const int nt = f.nt(), np = f.np();
    const double h2 = h * h;
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < np; ++i)
            out.at(j, i) =
                (f.at(j, (i + 1) % np) - 2.0 * f.at(j, i) + f.at(j, (i + np - 1) % np)) / h2;
    return out;
}

// ---- grid frame: everything derived from rho in one pass ----

struct Frame {
    int nt = 0, np = 0;
    double h_theta = 0.0, h_phi = 0.0;
    std::vector<Eigen::Vector3d> x, xt, xp, normal;
    Field e, f, g;     // first fundamental form
    Field l, m, nn;    // second fundamental form, h_ab = -<X_ab, N>
    Field k1, k2;
    std::vector<Eigen::Vector3d> dir1, dir2;

    Frame(int nt_, int np_)
        : nt(nt_),
          np(np_),
          x(static_cast<std::size_t>(nt_) * np_),
          xt(x.size()),
          xp(x.size()),
          normal(x.size()),
          e(nt_, np_),
          f(nt_, np_),
          g(nt_, np_),
          l(nt_, np_),
          m(nt_, np_),
          nn(nt_, np_),
          k1(nt_, np_),
          k2(nt_, np_),
          dir1(x.size()),
          dir2(x.size()) {}

    std::size_t idx(int j, int i) const { return static_cast<std::size_t>(j * np + i); }
};

void principal_from_forms(double e, double f, double g, double l, double m, double nn,
                          double& k1, double& k2) {
    const double w = e * g - f * f;
    const double b = e * nn + g * l - 2.0 * f * m;
    const double c = l * nn - m * m;
    // b^2 - 4wc in a factored form whose terms vanish individually at
    // umbilic points, so sqrt does not amplify cancellation noise there
    const double disc =
        std::max((e * nn - g * l) * (e * nn - g * l) +
                     4.0 * (e * m - f * l) * (g * m - f * nn),
                 0.0);
    const double sq = std::sqrt(disc);
    const double t = b >= 0.0 ? b + sq : b - sq;
    double ka, kb;
    if (t == 0.0) {
        ka = kb = 0.0;
    } else {
        ka = t / (2.0 * w);
        kb = 2.0 * c / t;
    }
    k1 = std::max(ka, kb);
    k2 = std::min(ka, kb);
}

Frame build_frame(const RadialGrid& grid) {
    const int nt = grid.n_theta(), np = grid.n_phi();
    Frame fr(nt, np);
    fr.h_theta = kPi / nt;
    fr.h_phi = 2.0 * kPi / np;

    const Field rho(nt, np, grid.data());
    const Field rt = d_theta(rho, fr.h_theta);
    const Field rp = d_phi(rho, fr.h_phi);
    const Field rtt = d_theta_theta(rho, fr.h_theta);
    const Field rpp = d_phi_phi(rho, fr.h_phi);
    const Field rtp = d_theta(rp, fr.h_theta);

    for (int j = 0; j < nt; ++j) {
        const double th = grid.theta(j);
        const double st = std::sin(th), ct = std::cos(th);
        for (int i = 0; i < np; ++i) {
            const double ph = grid.phi(i);
            const double sp = std::sin(ph), cp = std::cos(ph);
            const Eigen::Vector3d u(st * cp, st * sp, ct);
            const Eigen::Vector3d ut(ct * cp, ct * sp, -st);
            const Eigen::Vector3d up(-st * sp, st * cp, 0.0);
            const Eigen::Vector3d utt = -u;
            const Eigen::Vector3d utp(-ct * sp, ct * cp, 0.0);
            const Eigen::Vector3d upp(-st * cp, -st * sp, 0.0);

            const double r = rho.at(j, i);
            const std::size_t k = fr.idx(j, i);
            fr.x[k] = r * u;
            fr.xt[k] = rt.at(j, i) * u + r * ut;
            fr.xp[k] = rp.at(j, i) * u + r * up;
            const Eigen::Vector3d xtt = rtt.at(j, i) * u + 2.0 * rt.at(j, i) * ut + r * utt;
            const Eigen::Vector3d xtp =
                rtp.at(j, i) * u + rt.at(j, i) * up + rp.at(j, i) * ut + r * utp;
            const Eigen::Vector3d xpp = rpp.at(j, i) * u + 2.0 * rp.at(j, i) * up + r * upp;

            const Eigen::Vector3d cross = fr.xt[k].cross(fr.xp[k]);
            const double cn = cross.norm();
            if (!(cn > 1e-12 * fr.xt[k].norm() * fr.xp[k].norm()) || !std::isfinite(cn))
                throw GridError(j, i, "degenerate metric");
            Eigen::Vector3d n = cross / cn;
            if (fr.x[k].dot(n) < 0.0) n = -n;  // outer normal for a star-shaped surface
            fr.normal[k] = n;

            fr.e.at(j, i) = fr.xt[k].dot(fr.xt[k]);
            fr.f.at(j, i) = fr.xt[k].dot(fr.xp[k]);
            fr.g.at(j, i) = fr.xp[k].dot(fr.xp[k]);
            fr.l.at(j, i) = -xtt.dot(n);
            fr.m.at(j, i) = -xtp.dot(n);
            fr.nn.at(j, i) = -xpp.dot(n);

            double kap1, kap2;
            principal_from_forms(fr.e.at(j, i), fr.f.at(j, i), fr.g.at(j, i), fr.l.at(j, i),
                                 fr.m.at(j, i), fr.nn.at(j, i), kap1, kap2);
            fr.k1.at(j, i) = kap1;
            fr.k2.at(j, i) = kap2;

            // direction of the larger curvature from the null row of (h - k1 g)
            const double r1x = fr.l.at(j, i) - kap1 * fr.e.at(j, i);
            const double r1y = fr.m.at(j, i) - kap1 * fr.f.at(j, i);
            const double r2y = fr.nn.at(j, i) - kap1 * fr.g.at(j, i);
            double vx, vy;
            if (std::abs(r1x) + std::abs(r1y) >= std::abs(r1y) + std::abs(r2y)) {
                vx = -r1y;
                vy = r1x;
            } else {
                vx = -r2y;
                vy = r1y;
            }
            Eigen::Vector3d d1 = vx * fr.xt[k] + vy * fr.xp[k];
            if (d1.norm() < 1e-12 * fr.xt[k].norm()) d1 = fr.xt[k];  // umbilic: any direction
            d1.normalize();
            fr.dir1[k] = d1;
            fr.dir2[k] = n.cross(d1).normalized();
        }
    }
    return fr;
}

SurfaceSample sample_from_frame(const Frame& fr, const RadialGrid& grid, int j, int i) {
    SurfaceSample s;
    const std::size_t k = fr.idx(j, i);
    s.theta = grid.theta(j);
    s.phi = grid.phi(i);
    s.position = fr.x[k];
    s.normal = fr.normal[k];
    s.kappa1 = fr.k1.at(j, i);
    s.kappa2 = fr.k2.at(j, i);
    s.support = fr.x[k].dot(fr.normal[k]);
    s.radius2 = fr.x[k].squaredNorm();
    return s;
}

}  // namespace

SurfaceSample ellipsoid_sample_at(const std::array<double, 3>& axes, double theta, double phi) {
    for (double ax : axes)
        if (!(ax > 0.0) || !std::isfinite(ax))
            throw std::invalid_argument("ellipsoid: axes must be positive");
    const double a = axes[0], b = axes[1], c = axes[2];
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);

    const Eigen::Vector3d x(a * st * cp, b * st * sp, c * ct);
    const Eigen::Vector3d xt(a * ct * cp, b * ct * sp, -c * st);
    const Eigen::Vector3d xp(-a * st * sp, b * st * cp, 0.0);
    const Eigen::Vector3d xtt = -x;
    const Eigen::Vector3d xtp(-a * ct * sp, b * ct * cp, 0.0);
    const Eigen::Vector3d xpp(-a * st * cp, -b * st * sp, 0.0);

    const Eigen::Vector3d cross = xt.cross(xp);
    const double cn = cross.norm();
    if (cn == 0.0) throw std::invalid_argument("ellipsoid: parametrization singular at the poles");
    Eigen::Vector3d n = cross / cn;
    if (x.dot(n) < 0.0) n = -n;

    const double e = xt.dot(xt), f = xt.dot(xp), g = xp.dot(xp);
    const double l = -xtt.dot(n), m = -xtp.dot(n), nn = -xpp.dot(n);

    SurfaceSample s;
    s.theta = theta;
    s.phi = phi;
    s.position = x;
    s.normal = n;
    principal_from_forms(e, f, g, l, m, nn, s.kappa1, s.kappa2);
    s.support = x.dot(n);
    s.radius2 = x.squaredNorm();
    return s;
}

SurfaceSample ellipsoid_sample_at_direction(const std::array<double, 3>& axes,
                                            const Eigen::Vector3d& u) {
    const Eigen::Vector3d dir = u.normalized();
    double q = 0.0;
    for (int i = 0; i < 3; ++i) q += (dir(i) / axes[static_cast<std::size_t>(i)]) *
                                     (dir(i) / axes[static_cast<std::size_t>(i)]);
    const double rho = 1.0 / std::sqrt(q);
    const Eigen::Vector3d p = rho * dir;
    const double theta = std::acos(std::clamp(p(2) / axes[2], -1.0, 1.0));
    const double phi = std::atan2(p(1) / axes[1], p(0) / axes[0]);
    return ellipsoid_sample_at(axes, theta, phi);
}

std::vector<SurfaceSample> ellipsoid_samples(const std::array<double, 3>& axes, int n_theta,
                                             int n_phi) {
    if (n_theta < 2 || n_phi < 4)
        throw std::invalid_argument("ellipsoid_samples: grid too coarse");
    std::vector<SurfaceSample> out;
    out.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    for (int j = 0; j < n_theta; ++j) {
        const double th = (j + 0.5) * kPi / n_theta;
        for (int i = 0; i < n_phi; ++i)
            out.push_back(ellipsoid_sample_at(axes, th, 2.0 * kPi * i / n_phi));
    }
    return out;
}

RadialGrid ellipsoid_radial_grid(const std::array<double, 3>& axes, int n_theta, int n_phi) {
    for (double ax : axes)
        if (!(ax > 0.0)) throw std::invalid_argument("ellipsoid: axes must be positive");
    return RadialGrid::from_function(n_theta, n_phi, [&axes](double th, double ph) {
        const double ux = std::sin(th) * std::cos(ph);
        const double uy = std::sin(th) * std::sin(ph);
        const double uz = std::cos(th);
        return 1.0 / std::sqrt(ux * ux / (axes[0] * axes[0]) + uy * uy / (axes[1] * axes[1]) +
                               uz * uz / (axes[2] * axes[2]));
    });
}

std::vector<SurfaceSample> radial_grid_samples(const RadialGrid& grid) {
    const Frame fr = build_frame(grid);
    std::vector<SurfaceSample> out;
    out.reserve(fr.x.size());
    for (int j = 0; j < fr.nt; ++j)
        for (int i = 0; i < fr.np; ++i) out.push_back(sample_from_frame(fr, grid, j, i));
    return out;
}

std::vector<double> inverse_phi(const std::vector<SurfaceSample>& samples, double alpha) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double sigma2 = samples[k].kappa1 * samples[k].kappa2;
        if (!(sigma2 > 0.0)) throw NotTwoConvex(k, sigma2);
        if (!(samples[k].support > 0.0))
            throw std::invalid_argument("inverse_phi: support must be positive at sample " +
                                        std::to_string(k));
        out.push_back(sigma2 / std::pow(samples[k].support, alpha));
    }
    return out;
}

GridPhi inverse_phi_with_gradient(const RadialGrid& grid, double alpha) {
    const Frame fr = build_frame(grid);
    const int nt = fr.nt, np = fr.np;
    Field phi_field(nt, np);
    GridPhi out;
    out.phi.resize(fr.x.size());
    out.grad.resize(fr.x.size());
    out.dir1 = fr.dir1;
    out.dir2 = fr.dir2;
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < np; ++i) {
            const double sigma2 = fr.k1.at(j, i) * fr.k2.at(j, i);
            if (!(sigma2 > 0.0)) throw NotTwoConvex(fr.idx(j, i), sigma2);
            const double s = fr.x[fr.idx(j, i)].dot(fr.normal[fr.idx(j, i)]);
            phi_field.at(j, i) = sigma2 / std::pow(s, alpha);
            out.phi[fr.idx(j, i)] = phi_field.at(j, i);
        }
    const Field ft = d_theta(phi_field, fr.h_theta);
    const Field fp = d_phi(phi_field, fr.h_phi);
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < np; ++i) {
            const std::size_t k = fr.idx(j, i);
            const double w = fr.e.at(j, i) * fr.g.at(j, i) - fr.f.at(j, i) * fr.f.at(j, i);
            // tangential gradient grad phi = g^{ab} (d_b phi) X_a
            const Eigen::Vector3d grad =
                ((fr.g.at(j, i) * ft.at(j, i) - fr.f.at(j, i) * fp.at(j, i)) * fr.xt[k] +
                 (fr.e.at(j, i) * fp.at(j, i) - fr.f.at(j, i) * ft.at(j, i)) * fr.xp[k]) /
                w;
            out.grad[k] = {grad.dot(fr.dir1[k]), grad.dot(fr.dir2[k])};
        }
    return out;
}

SurfaceReport aggregate(const std::vector<SurfaceSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("aggregate: no samples");
    SurfaceReport rep;
    rep.n_samples = samples.size();
    rep.delta = std::numeric_limits<double>::infinity();
    rep.sup_kappa = -std::numeric_limits<double>::infinity();
    rep.min_sigma2 = std::numeric_limits<double>::infinity();
    rep.min_support = std::numeric_limits<double>::infinity();
    double min_sigma1 = std::numeric_limits<double>::infinity();
    for (const SurfaceSample& s : samples) {
        rep.delta = std::min(rep.delta, s.support * s.support / s.radius2);
        rep.sup_kappa = std::max(rep.sup_kappa, s.kappa1);
        rep.min_sigma2 = std::min(rep.min_sigma2, s.kappa1 * s.kappa2);
        rep.min_support = std::min(rep.min_support, s.support);
        min_sigma1 = std::min(min_sigma1, s.kappa1 + s.kappa2);
    }
    rep.two_convex = min_sigma1 > 0.0 && rep.min_sigma2 > 0.0;
    return rep;
}

double codazzi_residual(const RadialGrid& grid) {
    const Frame fr = build_frame(grid);
    const double ht = fr.h_theta, hp = fr.h_phi;

    const Field d1e = d_theta(fr.e, ht), d2e = d_phi(fr.e, hp);
    const Field d1f = d_theta(fr.f, ht), d2f = d_phi(fr.f, hp);
    const Field d1g = d_theta(fr.g, ht), d2g = d_phi(fr.g, hp);
    const Field d1l = d_theta(fr.l, ht), d2l = d_phi(fr.l, hp);
    const Field d1m = d_theta(fr.m, ht), d2m = d_phi(fr.m, hp);
    const Field d1n = d_theta(fr.nn, ht), d2n = d_phi(fr.nn, hp);

    double worst = 0.0;
    for (int j = 1; j < fr.nt - 1; ++j)
        for (int i = 0; i < fr.np; ++i) {
            const double e = fr.e.at(j, i), f = fr.f.at(j, i), g = fr.g.at(j, i);
            const double l = fr.l.at(j, i), m = fr.m.at(j, i), nn = fr.nn.at(j, i);
            const double w = e * g - f * f;
            const double gi11 = g / w, gi12 = -f / w, gi22 = e / w;

            const double c1_11 = 0.5 * (gi11 * d1e.at(j, i) +
                                        gi12 * (2.0 * d1f.at(j, i) - d2e.at(j, i)));
            const double c2_11 = 0.5 * (gi12 * d1e.at(j, i) +
                                        gi22 * (2.0 * d1f.at(j, i) - d2e.at(j, i)));
            const double c1_12 = 0.5 * (gi11 * d2e.at(j, i) + gi12 * d1g.at(j, i));
            const double c2_12 = 0.5 * (gi12 * d2e.at(j, i) + gi22 * d1g.at(j, i));
            const double c1_22 = 0.5 * (gi11 * (2.0 * d2f.at(j, i) - d1g.at(j, i)) +
                                        gi12 * d2g.at(j, i));
            const double c2_22 = 0.5 * (gi12 * (2.0 * d2f.at(j, i) - d1g.at(j, i)) +
                                        gi22 * d2g.at(j, i));

            // nabla_phi h_{i theta} - nabla_theta h_{i phi} for i = theta, phi
            const double r_theta = d2l.at(j, i) - d1m.at(j, i) - (c1_12 * l + c2_12 * m) +
                                   (c1_11 * m + c2_11 * nn);
            const double r_phi = d2m.at(j, i) - d1n.at(j, i) - (c1_22 * l + c2_22 * m) +
                                 (c1_12 * m + c2_12 * nn);
            worst = std::max({worst, std::abs(r_theta), std::abs(r_phi)});
        }
    return worst;
}

double weingarten_residual(const RadialGrid& grid) {
    const Frame fr = build_frame(grid);
    const int nt = fr.nt, np = fr.np;
    Field nx(nt, np), ny(nt, np), nz(nt, np);
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < np; ++i) {
            const Eigen::Vector3d& n = fr.normal[fr.idx(j, i)];
            nx.at(j, i) = n(0);
            ny.at(j, i) = n(1);
            nz.at(j, i) = n(2);
        }
    const Field tx = d_theta(nx, fr.h_theta), ty = d_theta(ny, fr.h_theta),
                tz = d_theta(nz, fr.h_theta);
    const Field px = d_phi(nx, fr.h_phi), py = d_phi(ny, fr.h_phi), pz = d_phi(nz, fr.h_phi);

    double worst = 0.0;
    for (int j = 1; j < nt - 1; ++j)
        for (int i = 0; i < np; ++i) {
            const std::size_t k = fr.idx(j, i);
            const Eigen::Vector3d nt_vec(tx.at(j, i), ty.at(j, i), tz.at(j, i));
            const Eigen::Vector3d np_vec(px.at(j, i), py.at(j, i), pz.at(j, i));
            worst = std::max({worst,
                              std::abs(fr.xt[k].dot(nt_vec) - fr.l.at(j, i)),
                              std::abs(fr.xt[k].dot(np_vec) - fr.m.at(j, i)),
                              std::abs(fr.xp[k].dot(nt_vec) - fr.m.at(j, i)),
                              std::abs(fr.xp[k].dot(np_vec) - fr.nn.at(j, i))});
        }
    return worst;
}

std::vector<SurfaceSample> samples_for(const SurfaceSpec& spec) {
    if (const auto* e = std::get_if<EllipsoidSpec>(&spec))
        return ellipsoid_samples(e->axes, e->n_theta, e->n_phi);
    return radial_grid_samples(std::get<RadialGrid>(spec));
}

}  // namespace s2m::geomkit
