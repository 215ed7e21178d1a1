#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/specfun/constants.hpp"
#include "oddpart/specfun/zeta.hpp"

namespace oddpart::analysis {

struct GammaLimitProbe {
    std::vector<std::pair<double, double>> values;  // (p, value)
    double extrapolated = 0;                        // p -> 2+ limit estimate
};

/// The limit the probe chases: (log 2 + gamma) / 2.
inline double gamma_limit_target() {
    return 0.5 * (specfun::kLn2 + specfun::kEulerGamma);
}

/// (1 - 2^{1-p}) zeta(p-1) - 1/(2(p-2)), rewritten pole-free as
///   -expm1(-d ln2)/(2d) + (1 - 2^{-1-d}) (zeta(1+d) - 1/d),  d = p-2,
/// so the value stays accurate arbitrarily close to p = 2.
inline double gamma_limit_value(double p) {
    if (!(p > 2.0) || !(p <= 3.0))
        throw ArgumentOutOfDomain("gamma_limit_probe expects p in (2, 3]");
    const double d = p - 2.0;
    const double head = -std::expm1(-d * specfun::kLn2) / (2.0 * d);
    const double factor = 1.0 - 0.5 * std::exp(-d * specfun::kLn2);
    return head + factor * specfun::zeta_minus_pole(1.0 + d);
}

/// Values at the requested p list plus a Neville extrapolation in
/// d = p - 2 toward d = 0.
inline GammaLimitProbe gamma_limit_probe(std::vector<double> p_list) {
    if (p_list.empty()) throw ArgumentOutOfDomain("gamma_limit_probe needs at least one p");
    GammaLimitProbe out;
    for (double p : p_list) out.values.emplace_back(p, gamma_limit_value(p));
    std::sort(out.values.begin(), out.values.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> h, tab;
    for (const auto& [p, v] : out.values) {
        h.push_back(p - 2.0);
        tab.push_back(v);
    }
    for (std::size_t lev = 1; lev < tab.size(); ++lev)
        for (std::size_t i = 0; i + lev < tab.size(); ++i)
            tab[i] = (h[i] * tab[i + 1] - h[i + lev] * tab[i]) / (h[i] - h[i + lev]);
    out.extrapolated = tab[0];
    return out;
}

}  // namespace oddpart::analysis
