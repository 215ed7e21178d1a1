#pragma once

#include <cmath>

#include "oddpart/errors.hpp"
#include "oddpart/specfun/constants.hpp"

namespace oddpart::specfun {

namespace detail {

// B_{2j} for j = 1..12
inline constexpr double kBernoulli[12] = {
    1.0 / 6,        -1.0 / 30,       1.0 / 42,       -1.0 / 30,
    5.0 / 66,       -691.0 / 2730,   7.0 / 6,        -3617.0 / 510,
    43867.0 / 798,  -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};

struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

/// Euler-Maclaurin core shared by the Hurwitz and pole-subtracted
/// variants. Returns   sum_{k>=0} (k+a)^{-s}  with the 1/(s-1) pole
/// either included (subtract_pole = false) or removed exactly via
/// expm1 (subtract_pole = true).
inline double hurwitz_em(double s, double a, bool subtract_pole) {
    const double target = 40.0 + 0.75 * s;
    long K = 0;
    if (a < target) K = static_cast<long>(std::ceil(target - a));
    Kahan acc;
    for (long k = 0; k < K; ++k) acc.add(std::pow(k + a, -s));
    const double N = K + a;
    const double logN = std::log(N);
    if (subtract_pole)
        acc.add(std::expm1((1.0 - s) * logN) / (s - 1.0));
    else
        acc.add(std::exp((1.0 - s) * logN) / (s - 1.0));
    const double Nms = std::exp(-s * logN);
    acc.add(0.5 * Nms);
    // correction terms B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
    double poch = s;          // (s)_{2j-1} built incrementally
    double npow = Nms / N;    // N^{-s-2j+1} at j=1
    double factdenom = 2.0;   // (2j)!
    for (int j = 1; j <= 12; ++j) {
        const double term = kBernoulli[j - 1] / factdenom * poch * npow;
        acc.add(term);
        if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        npow /= N * N;
        factdenom *= (2 * j + 1) * (2 * j + 2);
    }
    return acc.value();
}

}  // namespace detail

/// Hurwitz zeta, sum_{k>=0} (k+a)^{-s}, for s > 1 and a > 0.
inline double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw ArgumentOutOfDomain("hurwitz_zeta requires s > 1");
    if (!(a > 0.0)) throw ArgumentOutOfDomain("hurwitz_zeta requires a > 0");
    return detail::hurwitz_em(s, a, false);
}

/// zeta(s) - 1/(s-1), finite and smooth through s = 1+.
inline double zeta_minus_pole(double s) {
    if (!(s > 1.0)) throw ArgumentOutOfDomain("zeta is evaluated for s > 1 only");
    const double d = s - 1.0;
    if (d < 1e-8)
        return kEulerGamma - kStieltjes1 * d + 0.5 * kStieltjes2 * d * d;
    return detail::hurwitz_em(s, 1.0, true);
}

/// Riemann zeta for real s > 1. Euler-Maclaurin away from the pole,
/// Stieltjes expansion when s - 1 < 1e-8.
inline double zeta(double s) {
    if (!(s > 1.0)) throw ArgumentOutOfDomain("zeta is evaluated for s > 1 only");
    const double d = s - 1.0;
    if (d < 1e-8) return 1.0 / d + zeta_minus_pole(s);
    return detail::hurwitz_em(s, 1.0, false);
}

/// (1 - 2^{1-p}) zeta(p-1), the odd-partition tail bound; p > 2.
inline double tau_zeta_bound(double p) {
    if (!(p > 2.0)) throw ArgumentOutOfDomain("tau_zeta_bound requires p > 2");
    const double factor = -std::expm1((1.0 - p) * kLn2);
    const double d = p - 2.0;
    if (d < 1e-8)
        return factor / d + factor * zeta_minus_pole(p - 1.0);
    return factor * zeta(p - 1.0);
}

/// Tail sum_{N>=R} (2N+1)^{-q} = 2^{-q} * hurwitz_zeta(q, R + 1/2); q > 1.
inline double odd_power_tail(double q, long R) {
    if (!(q > 1.0)) throw ArgumentOutOfDomain("odd_power_tail requires q > 1");
    return std::exp(-q * kLn2) * hurwitz_zeta(q, R + 0.5);
}

}  // namespace oddpart::specfun
