#pragma once

#include <cmath>
#include <optional>

#include "oddpart/analysis/decay_fit.hpp"
#include "oddpart/families/spheroid.hpp"
#include "oddpart/np/spheroid.hpp"
#include "oddpart/np/willmore.hpp"
#include "oddpart/specfun/constants.hpp"

namespace oddpart::np {

/// Leading eigenvalue-decay coefficient of the spheroid spectrum and
/// its doubled (unit-interval) counterpart, computed from the Willmore
/// energy and the Euler characteristic of the surface.
struct WeylReport {
    SpheroidShape shape;
    double willmore = 0;
    int euler_char = 2;
    double coeff = 0;          // C~, 1/4 at the round sphere
    double coeff_doubled = 0;  // C = 2 C~
    std::optional<analysis::DecayFit> fit;  // empirical cross-check
};

struct WeylOptions {
    bool with_fit = false;
    std::uint64_t fit_j_lo = 1000;
    std::uint64_t fit_j_hi = 10000;
    SpectrumOptions spectrum;
    WillmoreOptions willmore;
};

inline double weyl_coeff_from_willmore(double willmore, int euler_char = 2) {
    return std::sqrt((3.0 * willmore - 2.0 * specfun::kPi * euler_char) /
                     (128.0 * specfun::kPi));
}

inline WeylReport weyl_coefficient(const SpheroidShape& shape, WeylOptions opt = {}) {
    WeylReport report;
    report.shape = shape;
    report.willmore = willmore_energy(shape, opt.willmore);
    report.coeff = weyl_coeff_from_willmore(report.willmore, report.euler_char);
    report.coeff_doubled = 2.0 * report.coeff;
    if (opt.with_fit) {
        if (shape.sphere_limit)
            throw ArgumentOutOfDomain("empirical fit needs a finite xi0");
        auto family = families::make_spheroid_family(shape.xi0, /*doubled=*/true, opt.spectrum);
        report.fit = analysis::decay_fit(family, opt.fit_j_lo, opt.fit_j_hi);
    }
    return report;
}

}  // namespace oddpart::np
