#pragma once

#include <cmath>

#include "oddpart/errors.hpp"
#include "oddpart/np/spheroid.hpp"
#include "oddpart/specfun/constants.hpp"

namespace oddpart::np {

struct WillmoreOptions {
    double rel_tol = 1e-10;
    int max_depth = 48;
    // absolute scale of the semi-axes; the energy is scale-invariant,
    // so this only exercises the degenerate-input guard
    double scale = 1.0;
};

namespace detail {

// 15-point Gauss-Legendre on [-1, 1]
inline constexpr double kGlx[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
inline constexpr double kGlw[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

/// Squared-mean-curvature area density of the spheroid meridian,
/// H^2 dA collapsed to a function of the polar angle:
///   f(t) = pi c^2 (a^2 + D^2)^2 sin t / (2 a D^5),  D^2 = a^2 cos^2 t + c^2 sin^2 t.
struct SpheroidMeridian {
    double a, c;
    double operator()(double t) const {
        const double st = std::sin(t), ct = std::cos(t);
        const double D2 = a * a * ct * ct + c * c * st * st;
        const double D = std::sqrt(D2);
        const double num = (a * a + D2) * (a * a + D2);
        return specfun::kPi * c * c * num * st / (2.0 * a * D2 * D2 * D);
    }
};

template <class F>
double gl15(const F& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < 15; ++i) acc += kGlw[i] * f(mid + half * kGlx[i]);
    return acc * half;
}

template <class F>
double adaptive(const F& f, double lo, double hi, double tol, int depth) {
    const double whole = gl15(f, lo, hi);
    const double mid = 0.5 * (lo + hi);
    const double split = gl15(f, lo, mid) + gl15(f, mid, hi);
    if (std::abs(whole - split) <= tol) return split;
    if (depth <= 0) throw QuadratureNonConvergence("willmore panel did not converge");
    return adaptive(f, lo, mid, 0.5 * tol, depth - 1) +
           adaptive(f, mid, hi, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Willmore energy of the prolate spheroid, integral of H^2 over the
/// surface; scale-free and >= 4*pi with equality at the round sphere.
inline double willmore_energy(const SpheroidShape& shape, WillmoreOptions opt = {}) {
    if (shape.sphere_limit) return 4.0 * specfun::kPi;
    if (!(opt.scale > 0)) throw ArgumentOutOfDomain("scale must be positive");
    const double a = opt.scale * std::sqrt(shape.xi0 * shape.xi0 - 1.0);
    const double c = opt.scale * shape.xi0;
    detail::SpheroidMeridian f{a, c};
    const double rough = detail::gl15(f, 0.0, specfun::kPi / 2);
    const double half = detail::adaptive(f, 0.0, specfun::kPi / 2,
                                         0.5 * opt.rel_tol * std::abs(rough), opt.max_depth);
    return 2.0 * half;  // symmetric about the equator
}

}  // namespace oddpart::np
