#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/specfun/legendre.hpp"

namespace oddpart::np {

enum class Precision { Double, Extended };

/// Prolate spheroid with surface coordinate xi0 > 1; scale-free, with
/// semi-axes proportional to (sqrt(xi0^2-1), sqrt(xi0^2-1), xi0).
/// The round sphere is the xi0 -> infinity limit and carries a tag.
struct SpheroidShape {
    double xi0 = std::numeric_limits<double>::infinity();
    bool sphere_limit = false;

    static SpheroidShape of(double xi0) {
        if (!(xi0 > 1.0)) throw ArgumentOutOfDomain("spheroid needs xi0 > 1");
        return SpheroidShape{xi0, false};
    }
    static SpheroidShape sphere() {
        return SpheroidShape{std::numeric_limits<double>::infinity(), true};
    }

    double eccentricity() const { return sphere_limit ? 0.0 : 1.0 / xi0; }
    double aspect_ratio() const {
        return sphere_limit ? 1.0 : xi0 / std::sqrt(xi0 * xi0 - 1.0);
    }
};

struct SpectrumOptions {
    long n_cap = 512;  // degrees above this are refused, never extrapolated
    Precision precision = Precision::Double;
};

/**
 * Double-layer (Neumann-Poincare) eigenvalues of a prolate spheroid,
 *
 *   lambda_{n,m} = 1/2 - (-1)^m ((n-m)!/(n+m)!) (xi0^2-1) dP_n^m(xi0) Q_n^m(xi0)
 *
 * evaluated with |m|, which in the normalized tables collapses to
 * 1/2 - (-1)^m (xi0^2-1) dphat_n qhat_n. The n = 0 value is exactly 1/2
 * by construction (dphat_0 = 0). Each degree is runtime-checked for
 * positivity; the trace identity sum_m lambda_{n,m} = 1/2 is enforced
 * where rows are assembled.
 */
template <class Real>
class SpheroidSpectrumT {
public:
    SpheroidSpectrumT(double xi0, long n_cap) : xi0_(xi0), n_cap_(n_cap), lam_(n_cap + 1) {
        if (!(xi0 > 1.0)) throw ArgumentOutOfDomain("spheroid needs xi0 > 1");
        if (n_cap < 0) throw ArgumentOutOfDomain("n_cap must be >= 0");
    }

    double xi0() const { return xi0_; }
    long n_cap() const { return n_cap_; }

    double eigenvalue(long n, long m) const {
        const long mm = std::abs(m);
        if (n < 0 || mm > n) throw ArgumentOutOfDomain("need n >= 0 and |m| <= n");
        require_degree(n);
        return table_for_m(mm)[n - mm];
    }

    /// lambda_{n,m} for m = -n..n, unsorted (symmetric in m).
    std::vector<double> degree_block(long n) const {
        require_degree(n);
        std::vector<double> out;
        out.reserve(2 * n + 1);
        for (long m = -n; m <= n; ++m) out.push_back(eigenvalue(n, m));
        return out;
    }

    double row_max(long n) const {
        require_degree(n);
        double mx = 0.0;
        for (long m = 0; m <= n; ++m) mx = std::max(mx, table_for_m(m)[n - m]);
        return mx;
    }

private:
    void require_degree(long n) const {
        if (n > n_cap_)
            throw RowLimitExceeded("degree " + std::to_string(n) + " above the configured cap " +
                                   std::to_string(n_cap_) + "; raise n_cap instead of extrapolating");
    }

    const std::vector<double>& table_for_m(long m) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (lam_[m]) return *lam_[m];
        }
        auto table = specfun::normalized_legendre_table<Real>(n_cap_, m, Real(xi0_));
        const double resid = table.wronskian_residual();
        if (resid > 1e-8)
            throw PrecisionLoss("Wronskian residual " + std::to_string(resid) + " at m = " +
                                std::to_string(m) + "; use the extended precision mode");
        const Real x2m1 = Real(xi0_) * Real(xi0_) - Real(1);
        const Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
        std::vector<double> vals(n_cap_ - m + 1);
        for (long n = m; n <= n_cap_; ++n) {
            const auto prod = table.dP(n).times(table.Q(n));
            const Real lam = Real(0.5) - sign * x2m1 * prod.to_real();
            if (!(lam > Real(0)))
                throw NonPositiveEigenvalue("lambda(" + std::to_string(n) + "," +
                                            std::to_string(m) + ") <= 0 at xi0 = " +
                                            std::to_string(xi0_));
            vals[n - m] = static_cast<double>(lam);
        }
        std::lock_guard<std::mutex> lock(mu_);
        if (!lam_[m]) lam_[m] = std::move(vals);
        return *lam_[m];
    }

    double xi0_;
    long n_cap_;
    mutable std::mutex mu_;
    mutable std::vector<std::optional<std::vector<double>>> lam_;
};

/// Type-erased spectrum handle so families need not care about the
/// working precision.
class SpheroidSpectrum {
public:
    SpheroidSpectrum(double xi0, SpectrumOptions opt = {}) : opt_(opt) {
        if (opt.precision == Precision::Extended)
            ext_ = std::make_shared<SpheroidSpectrumT<long double>>(xi0, opt.n_cap);
        else
            dbl_ = std::make_shared<SpheroidSpectrumT<double>>(xi0, opt.n_cap);
    }

    double eigenvalue(long n, long m) const {
        return dbl_ ? dbl_->eigenvalue(n, m) : ext_->eigenvalue(n, m);
    }
    std::vector<double> degree_block(long n) const {
        return dbl_ ? dbl_->degree_block(n) : ext_->degree_block(n);
    }
    double row_max(long n) const { return dbl_ ? dbl_->row_max(n) : ext_->row_max(n); }
    long n_cap() const { return opt_.n_cap; }
    double xi0() const { return dbl_ ? dbl_->xi0() : ext_->xi0(); }

private:
    SpectrumOptions opt_;
    std::shared_ptr<SpheroidSpectrumT<double>> dbl_;
    std::shared_ptr<SpheroidSpectrumT<long double>> ext_;
};

/// Point evaluation; shapes tagged as the sphere limit get the exact
/// classical spectrum 1/(2(2n+1)).
inline double np_eigenvalue(const SpheroidShape& shape, long n, long m,
                            SpectrumOptions opt = {}) {
    if (n < 0 || std::abs(m) > n) throw ArgumentOutOfDomain("need n >= 0 and |m| <= n");
    if (shape.sphere_limit) return 0.5 / (2 * n + 1);
    opt.n_cap = std::max(opt.n_cap, n);
    SpheroidSpectrum spec(shape.xi0, opt);
    return spec.eigenvalue(n, m);
}

}  // namespace oddpart::np
