#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "oddpart/decreasing_stream.hpp"
#include "oddpart/errors.hpp"
#include "oddpart/family.hpp"

namespace oddpart::analysis {

/// Fitted power law a_j ~ C_hat * j^alpha_hat over a j-window.
struct DecayFit {
    double C_hat = 0;
    double alpha_hat = 0;
    std::uint64_t j_lo = 0, j_hi = 0;
    double residual = 0;  // max relative deviation over the probes
    // Richardson-extrapolated limit of sqrt(j) a_j, filled when the
    // fitted exponent is close to -1/2.
    std::optional<double> c_extrapolated;
};

/// Log-uniform probe grid j = floor(j_lo * 2^{k/4}), clipped to the window.
inline std::vector<std::uint64_t> dyadic_probes(std::uint64_t j_lo, std::uint64_t j_hi) {
    if (j_lo < 1 || j_lo >= j_hi) throw ArgumentOutOfDomain("need 1 <= j_lo < j_hi");
    std::vector<std::uint64_t> out;
    for (int k = 0;; ++k) {
        const double v = static_cast<double>(j_lo) * std::exp2(k / 4.0);
        const auto j = static_cast<std::uint64_t>(v);
        if (j > j_hi) break;
        if (out.empty() || j != out.back()) out.push_back(j);
    }
    if (out.back() != j_hi) out.push_back(j_hi);
    return out;
}

/// Least squares of log a against log j; the samples are (j, a_j).
inline DecayFit fit_power_law(const std::vector<std::pair<std::uint64_t, double>>& samples) {
    if (samples.size() < 2) throw ArgumentOutOfDomain("power-law fit needs >= 2 samples");
    double mx = 0, my = 0;
    for (const auto& [j, a] : samples) {
        if (!(a > 0)) throw ArgumentOutOfDomain("power-law fit needs positive values");
        mx += std::log(static_cast<double>(j));
        my += std::log(a);
    }
    mx /= samples.size();
    my /= samples.size();
    double sxx = 0, sxy = 0;
    for (const auto& [j, a] : samples) {
        const double dx = std::log(static_cast<double>(j)) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(a) - my);
    }
    DecayFit fit;
    fit.alpha_hat = sxy / sxx;
    fit.C_hat = std::exp(my - fit.alpha_hat * mx);
    fit.j_lo = samples.front().first;
    fit.j_hi = samples.back().first;
    for (const auto& [j, a] : samples) {
        const double model = fit.C_hat * std::pow(static_cast<double>(j), fit.alpha_hat);
        fit.residual = std::max(fit.residual, std::abs(a - model) / model);
    }
    if (std::abs(fit.alpha_hat + 0.5) < 0.02) {
        // c_j = sqrt(j) a_j drifts like c + b/sqrt(j); eliminate the
        // leading term from two probes a factor 4 apart in j
        const auto& [j2, a2] = samples.back();
        for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
            if (it->first * 4 <= j2) {
                const double c1 = std::sqrt(static_cast<double>(it->first)) * it->second;
                const double c2 = std::sqrt(static_cast<double>(j2)) * a2;
                const double r = std::sqrt(static_cast<double>(j2) / static_cast<double>(it->first));
                fit.c_extrapolated = (r * c2 - c1) / (r - 1.0);
                break;
            }
        }
    }
    return fit;
}

struct DecayFitOptions {
    std::uint64_t enumeration_budget = 1'000'000;
    StreamOptions stream;
};

/// a_j at the dyadic probes, through the family's exact rank oracle
/// when it has one, otherwise through one enumeration pass.
template <class Scalar>
DecayFit decay_fit(const PartitionFamily<Scalar>& family, std::uint64_t j_lo, std::uint64_t j_hi,
                   DecayFitOptions opt = {}) {
    const auto probes = dyadic_probes(j_lo, j_hi);
    std::vector<std::pair<std::uint64_t, double>> samples;
    samples.reserve(probes.size());
    if (family.has_nth_value()) {
        for (auto j : probes) samples.emplace_back(j, to_double(family.nth_value(j)));
    } else {
        if (j_hi > opt.enumeration_budget)
            throw ArgumentOutOfDomain("window end " + std::to_string(j_hi) +
                                      " beyond the enumeration budget");
        DecreasingStream<Scalar> stream(family, opt.stream);
        std::uint64_t j = 0;
        std::size_t idx = 0;
        while (idx < probes.size()) {
            auto e = stream.next();
            ++j;
            if (j == probes[idx]) {
                samples.emplace_back(j, to_double(e.value));
                ++idx;
            }
        }
    }
    return fit_power_law(samples);
}

}  // namespace oddpart::analysis
