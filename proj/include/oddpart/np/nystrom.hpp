#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/np/spheroid.hpp"
#include "oddpart/specfun/constants.hpp"

namespace oddpart::np {

struct NystromOptions {
    int mesh_size = 1024;   // total node budget, grid is ~sqrt x sqrt
    int top_k = 9;
    int node_budget = 4000;
    int max_iterations = 400;
    // near-field handling
    double near_radius_factor = 2.5;
    int near_subdiv = 4;       // refined cells per axis for close targets
    int self_angles = 16;      // polar rule around the singular node
    int self_radial = 12;
};

namespace detail_nystrom {

using Vec3 = Eigen::Vector3d;

/// Spheroid chart over (u, phi), u = cos(theta):
/// r(u, phi) = (a s cos, a s sin, c u), s = sqrt(1-u^2).
struct Chart {
    double a, c;

    Vec3 point(double u, double phi) const {
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        return {a * s * std::cos(phi), a * s * std::sin(phi), c * u};
    }
    /// |r_u x r_phi|, the parametric area density
    double jacobian(double u, double phi) const {
        const double s2 = std::max(1e-300, 1.0 - u * u);
        // r_u x r_phi has norm a * sqrt(c^2 (1-u^2) + ... ) worked out:
        // r_u = (-a u cos/s, -a u sin/s, c), r_phi = (-a s sin, a s cos, 0)
        const double s = std::sqrt(s2);
        const double ru_x = -a * u * std::cos(phi) / s, ru_y = -a * u * std::sin(phi) / s;
        const Vec3 ru{ru_x, ru_y, c};
        const Vec3 rp{-a * s * std::sin(phi), a * s * std::cos(phi), 0.0};
        return ru.cross(rp).norm();
    }
    Vec3 normal(const Vec3& x) const {
        Vec3 n{x.x() / (a * a), x.y() / (a * a), x.z() / (c * c)};
        return n.normalized();
    }
};

/// Double-layer kernel <y - x, nu(y)> / (4 pi |x - y|^3); integrates to
/// 1/2 over the surface for x on the boundary.
inline double kernel(const Vec3& x, const Vec3& y, const Vec3& ny) {
    const Vec3 d = y - x;
    const double r = d.norm();
    return d.dot(ny) / (4.0 * specfun::kPi * r * r * r);
}

// 4-point Gauss-Legendre
inline constexpr double kG4x[4] = {-0.8611363115940526, -0.3399810435848563,
                                   0.3399810435848563, 0.8611363115940526};
inline constexpr double kG4w[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                   0.3478548451374538};

/// Refined integral of kernel(x, .) over one parameter cell.
inline double cell_integral(const Chart& chart, const Vec3& x, double u0, double phi0, double du,
                            double dphi, int subdiv) {
    double total = 0.0;
    const double hu = du / subdiv, hp = dphi / subdiv;
    for (int iu = 0; iu < subdiv; ++iu)
        for (int ip = 0; ip < subdiv; ++ip) {
            const double uc = u0 - du / 2 + (iu + 0.5) * hu;
            const double pc = phi0 - dphi / 2 + (ip + 0.5) * hp;
            for (int gu = 0; gu < 4; ++gu)
                for (int gp = 0; gp < 4; ++gp) {
                    const double u = uc + 0.5 * hu * kG4x[gu];
                    const double phi = pc + 0.5 * hp * kG4x[gp];
                    if (std::abs(u) >= 1.0) continue;
                    const Vec3 y = chart.point(u, phi);
                    total += kG4w[gu] * kG4w[gp] * 0.25 * hu * hp *
                             kernel(x, y, chart.normal(y)) * chart.jacobian(u, phi);
                }
        }
    return total;
}

/// Integral over the node's own cell in local polar coordinates; the
/// rho jacobian cancels the 1/rho kernel singularity.
inline double self_cell_integral(const Chart& chart, double u0, double phi0, double du,
                                 double dphi, int n_angles, int n_radial) {
    const Vec3 x = chart.point(u0, phi0);
    const int panels = (n_radial + 3) / 4;  // composite GL4 panels radially
    double total = 0.0;
    const double dal = 2.0 * specfun::kPi / n_angles;
    for (int ia = 0; ia < n_angles; ++ia) {
        const double alpha = (ia + 0.5) * dal;
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        double tmax = 1e300;
        if (std::abs(ca) > 1e-14) tmax = std::min(tmax, (du / 2) / std::abs(ca));
        if (std::abs(sa) > 1e-14) tmax = std::min(tmax, (dphi / 2) / std::abs(sa));
        const double hpanel = tmax / panels;
        for (int pnl = 0; pnl < panels; ++pnl) {
            const double t0 = pnl * hpanel;
            for (int g = 0; g < 4; ++g) {
                const double t = t0 + 0.5 * hpanel * (1.0 + kG4x[g]);
                const double u = u0 + t * ca;
                const double phi = phi0 + t * sa;
                if (std::abs(u) >= 1.0) continue;
                const Vec3 y = chart.point(u, phi);
                total += kG4w[g] * 0.5 * hpanel * dal * t *
                         kernel(x, y, chart.normal(y)) * chart.jacobian(u, phi);
            }
        }
    }
    return total;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail_nystrom

/**
 * Independent discretization oracle for the spheroid NP spectrum: a
 * locally corrected product-quadrature Nystrom method on the (cos
 * theta, phi) midpoint grid, with the weakly singular diagonal handled
 * by a polar rule on the node's own cell. Returns the top_k eigenvalue
 * approximations of the dense collocation matrix, computed by subspace
 * iteration with a deterministic start. Accuracy is deliberately
 * modest (~1e-2 at the default budget); this is a validation path, not
 * the production formula.
 */
inline std::vector<double> nystrom_eigenvalues(const SpheroidShape& shape,
                                               NystromOptions opt = {}) {
    using namespace detail_nystrom;
    if (opt.mesh_size > opt.node_budget)
        throw BudgetExceeded("mesh_size " + std::to_string(opt.mesh_size) +
                             " above the node budget " + std::to_string(opt.node_budget));
    const int side = std::max(8, static_cast<int>(std::sqrt(static_cast<double>(opt.mesh_size))));
    const int nu = side, nphi = side;
    const int N = nu * nphi;
    if (opt.top_k < 1 || opt.top_k > N / 4)
        throw ArgumentOutOfDomain("top_k out of range for this mesh");

    Chart chart{1.0, 1.0};
    if (!shape.sphere_limit) {
        chart.a = std::sqrt(shape.xi0 * shape.xi0 - 1.0);
        chart.c = shape.xi0;
    }

    const double du = 2.0 / nu, dphi = 2.0 * specfun::kPi / nphi;
    std::vector<double> us(N), phis(N), w(N);
    std::vector<Vec3> pts(N), nrm(N);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nphi; ++j) {
            const int id = i * nphi + j;
            us[id] = -1.0 + (i + 0.5) * du;
            phis[id] = (j + 0.5) * dphi;
            pts[id] = chart.point(us[id], phis[id]);
            nrm[id] = chart.normal(pts[id]);
            w[id] = chart.jacobian(us[id], phis[id]) * du * dphi;
        }

    double hmax = 0.0;
    for (int i = 0; i < N; ++i) hmax = std::max(hmax, std::sqrt(w[i]));
    const double rnear = opt.near_radius_factor * hmax;

    Eigen::MatrixXd A(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) {
                A(i, j) = self_cell_integral(chart, us[j], phis[j], du, dphi, opt.self_angles,
                                             opt.self_radial);
            } else if ((pts[i] - pts[j]).norm() < rnear) {
                A(i, j) = cell_integral(chart, pts[i], us[j], phis[j], du, dphi, opt.near_subdiv);
            } else {
                A(i, j) = kernel(pts[i], pts[j], nrm[j]) * w[j];
            }
        }
    }

    // subspace iteration with Rayleigh-Ritz on the dominant block
    const int p = std::min(N, opt.top_k + 10);
    Eigen::MatrixXd X(N, p);
    std::uint64_t state = 0x6f5902ac237024bdULL;
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < N; ++i) {
            state = splitmix64(state);
            X(i, j) = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
        }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(N, p);
    std::vector<double> prev(opt.top_k, 1e300);
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        Eigen::MatrixXd Z = A * Q;
        Eigen::MatrixXd H = Q.transpose() * Z;
        Eigen::EigenSolver<Eigen::MatrixXd> es(H);
        if (es.info() != Eigen::Success) throw EigenSolveFailure("projected eigensolve failed");
        std::vector<double> ritz(p);
        for (int i = 0; i < p; ++i) ritz[i] = es.eigenvalues()[i].real();
        std::sort(ritz.begin(), ritz.end(), std::greater<>());
        double drift = 0.0;
        for (int i = 0; i < opt.top_k; ++i) drift = std::max(drift, std::abs(ritz[i] - prev[i]));
        prev.assign(ritz.begin(), ritz.begin() + opt.top_k);
        if (drift < 1e-11) return prev;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr2(Z);
        Q = qr2.householderQ() * Eigen::MatrixXd::Identity(N, p);
    }
    throw EigenSolveFailure("subspace iteration did not settle within the iteration cap");
}

}  // namespace oddpart::np
