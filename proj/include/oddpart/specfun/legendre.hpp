#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/specfun/constants.hpp"

namespace oddpart::specfun {

/// Value carried as mantissa * 2^exponent so that recurrences over
/// steeply growing or decaying Legendre functions never leave the
/// floating range. Real is double or long double.
template <class Real>
struct Scaled {
    Real m = Real(0);
    long e = 0;

    static Scaled of(Real v) {
        Scaled s{v, 0};
        s.normalize();
        return s;
    }
    void normalize() {
        if (m == Real(0)) {
            e = 0;
            return;
        }
        int k = 0;
        m = std::frexp(m, &k);
        e += k;
    }
    Real to_real() const { return std::ldexp(m, static_cast<int>(e)); }
    bool zero() const { return m == Real(0); }

    Scaled times(Real a) const {
        Scaled r{m * a, e};
        r.normalize();
        return r;
    }
    Scaled times(const Scaled& o) const {
        Scaled r{m * o.m, e + o.e};
        r.normalize();
        return r;
    }
    Scaled over(const Scaled& o) const {
        Scaled r{m / o.m, e - o.e};
        r.normalize();
        return r;
    }
    /// a*x + b*y with exponent alignment.
    static Scaled combine(Real a, const Scaled& x, Real b, const Scaled& y) {
        if (x.zero()) return Scaled{b * y.m, y.e}.renormed();
        if (y.zero()) return Scaled{a * x.m, x.e}.renormed();
        const long E = std::max(x.e, y.e);
        const Real xt = (E - x.e > 8000) ? Real(0) : std::ldexp(a * x.m, static_cast<int>(x.e - E));
        const Real yt = (E - y.e > 8000) ? Real(0) : std::ldexp(b * y.m, static_cast<int>(y.e - E));
        Scaled r{xt + yt, E};
        r.normalize();
        return r;
    }
    Scaled renormed() const {
        Scaled r = *this;
        r.normalize();
        return r;
    }
};

/**
 * Normalized associated Legendre pair on x > 1:
 *
 *   phat_n = sqrt((n-m)!/(n+m)!) P_n^m,   qhat_n likewise for Q_n^m,
 *
 * in the plain derivative convention (no Condon-Shortley factor), so
 * P_n^m > 0 on x > 1. Both satisfy the symmetric three-term recurrence
 *
 *   sqrt((n+m+1)(n-m+1)) f_{n+1} = (2n+1) x f_n - sqrt((n+m)(n-m)) f_{n-1}.
 *
 * P runs forward from the diagonal seed (stable, P is dominant). Q runs
 * backward Miller-style from a trial degree above n_max and is fixed in
 * scale by the degree-lowering cross relation
 *
 *   phat_{m+1} qhat_m - phat_m qhat_{m+1} = (-1)^m / sqrt(2m+1),
 *
 * whose constant chains down to the closed forms Q_0 = atanh(1/x),
 * Q_1 = x Q_0 - 1 at m = 0. In this normalization the Wronskian is
 * n-independent:
 *
 *   phat dqhat - dphat qhat = (-1)^m / (1 - x^2),
 *
 * which is the backbone consistency check for the whole table.
 */
template <class Real>
struct NormalizedLegendreTable {
    long m = 0;
    Real x{};
    long n_lo = 0;
    std::vector<Scaled<Real>> p, dp, q, dq;  // index n - n_lo, n in [m, n_max]

    const Scaled<Real>& P(long n) const { return p[n - n_lo]; }
    const Scaled<Real>& dP(long n) const { return dp[n - n_lo]; }
    const Scaled<Real>& Q(long n) const { return q[n - n_lo]; }
    const Scaled<Real>& dQ(long n) const { return dq[n - n_lo]; }

    double wronskian_residual() const {
        const Real target = Real(1) / (Real(1) - x * x);
        const Real sgn = (m % 2 == 0) ? Real(1) : Real(-1);
        double worst = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Scaled<Real> w =
                Scaled<Real>::combine(Real(1), p[i].times(dq[i]), Real(-1), dp[i].times(q[i]));
            const Real rel = std::abs((w.to_real() - sgn * target) / target);
            worst = std::max(worst, static_cast<double>(rel));
        }
        return worst;
    }
};

namespace detail {

template <class Real>
long miller_start(Real x, long n_max) {
    const double gap = static_cast<double>(x) - 1.0;
    const double extra = std::ceil(10.0 / gap);
    if (extra > 200000)
        throw PrecisionLoss("argument too close to 1 for the working precision (x = " +
                            std::to_string(static_cast<double>(x)) + ")");
    return n_max + 20 + static_cast<long>(extra);
}

}  // namespace detail

template <class Real>
NormalizedLegendreTable<Real> normalized_legendre_table(long n_max, long m, Real x) {
    if (!(x > Real(1))) throw ArgumentOutOfDomain("legendre functions need x > 1");
    if (m < 0 || m > n_max) throw ArgumentOutOfDomain("need 0 <= m <= n_max");
    using S = Scaled<Real>;
    const Real s = std::sqrt((x - Real(1)) * (x + Real(1)));
    const Real x2m1 = x * x - Real(1);
    const long count = n_max - m + 1;
    const auto cn = [m](long k) { return std::sqrt(Real(k + m) * Real(k - m)); };

    NormalizedLegendreTable<Real> t;
    t.m = m;
    t.x = x;
    t.n_lo = m;
    t.p.resize(count);
    t.dp.resize(count);
    t.q.resize(count);
    t.dq.resize(count);

    // P: forward from the diagonal
    S pm = S::of(Real(1));
    for (long k = 1; k <= m; ++k)
        pm = pm.times(s * std::sqrt((Real(2 * k) - 1) / Real(2 * k)));
    t.p[0] = pm;
    const S p_m1 = pm.times(std::sqrt(Real(2 * m) + 1) * x);  // phat_{m+1}
    if (count > 1) {
        t.p[1] = p_m1;
        for (long n = m + 1; n < n_max; ++n)
            t.p[n + 1 - m] =
                S::combine((Real(2 * n) + 1) * x, t.p[n - m], -cn(n), t.p[n - 1 - m])
                    .times(Real(1) / cn(n + 1));
    }

    // Q: Miller backward pass
    const long n_start = detail::miller_start(x, n_max);
    S above = S::of(Real(0));  // q~ at n_start + 1
    S cur = S::of(Real(1));    // q~ at n_start
    std::vector<S> qt(count);
    S qt_below_m{};  // q~_{m+1} survives even when count == 1
    for (long n = n_start; n >= m + 1; --n) {
        if (n <= n_max) qt[n - m] = cur;
        if (n == m + 1) qt_below_m = cur;
        const S below =
            S::combine((Real(2 * n) + 1) * x, cur, -cn(n + 1), above).times(Real(1) / cn(n));
        above = cur;
        cur = below;
    }
    qt[0] = cur;  // q~_m

    const Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
    const S cas = S::combine(Real(1), p_m1.times(qt[0]), Real(-1), pm.times(qt_below_m));
    if (cas.zero()) throw PrecisionLoss("legendre normalization lost all digits");
    const S scale = S::of(sign / std::sqrt(Real(2 * m) + 1)).over(cas);
    for (long i = 0; i < count; ++i) t.q[i] = qt[i].times(scale);
    const S q_below_m = qt_below_m.times(scale);  // qhat_{m+1}

    // derivatives: (x^2-1) f'_n = n x f_n - c_n f_{n-1}; at the bottom
    // degree the lowering term vanishes for P and the raising ladder
    // (x^2-1) f'_n = c_{n+1} f_{n+1} - (n+1) x f_n covers Q.
    t.dp[0] = t.p[0].times(Real(m) * x / x2m1);
    t.dq[0] = S::combine(cn(m + 1), q_below_m, -(Real(m) + 1) * x, t.q[0]).times(Real(1) / x2m1);
    for (long n = m + 1; n <= n_max; ++n) {
        t.dp[n - m] =
            S::combine(Real(n) * x, t.p[n - m], -cn(n), t.p[n - 1 - m]).times(Real(1) / x2m1);
        t.dq[n - m] =
            S::combine(Real(n) * x, t.q[n - m], -cn(n), t.q[n - 1 - m]).times(Real(1) / x2m1);
    }
    return t;
}

/// Unnormalized values of P_n^m, Q_n^m and their x-derivatives at one
/// degree. Values far beyond double range degrade to +-inf.
struct LegendrePair {
    long n = 0;
    long m = 0;
    double x = 0;
    double P = 0, dP = 0, Q = 0, dQ = 0;
};

/**
 * P and Q with derivatives for n = m..n_max at fixed order m, x > 1.
 * Raises PrecisionLoss when the Wronskian residual exceeds 1e-8.
 */
inline std::vector<LegendrePair> legendre_table(long n_max, long m, double x) {
    const auto t = normalized_legendre_table<double>(n_max, m, x);
    const double resid = t.wronskian_residual();
    if (resid > 1e-8)
        throw PrecisionLoss("Wronskian residual " + std::to_string(resid) +
                            " above 1e-8; x too close to 1 for double precision");
    std::vector<LegendrePair> out;
    out.reserve(static_cast<std::size_t>(n_max - m + 1));
    for (long n = m; n <= n_max; ++n) {
        // sqrt((n+m)!/(n-m)!) as mantissa * 2^exponent
        const double L = 0.5 * (std::lgamma(double(n + m + 1)) - std::lgamma(double(n - m + 1))) / kLn2;
        double ip;
        const double frac = std::modf(L, &ip);
        const Scaled<double> fac = Scaled<double>{std::exp2(frac), static_cast<long>(ip)}.renormed();
        LegendrePair pr;
        pr.n = n;
        pr.m = m;
        pr.x = x;
        pr.P = t.P(n).times(fac).to_real();
        pr.dP = t.dP(n).times(fac).to_real();
        pr.Q = t.Q(n).times(fac).to_real();
        pr.dQ = t.dQ(n).times(fac).to_real();
        out.push_back(pr);
    }
    return out;
}

}  // namespace oddpart::specfun
