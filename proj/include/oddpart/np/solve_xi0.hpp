#pragma once

#include <cmath>
#include <string>

#include "oddpart/errors.hpp"
#include "oddpart/np/weyl.hpp"

namespace oddpart::np {

struct SolveOptions {
    Precision precision = Precision::Double;
    double value_tol = 1e-8;
    WillmoreOptions willmore;
    // Double precision keeps out of the Q-function blow-up near the
    // focal segment; the extended mode may step closer to xi0 = 1.
    double wall_double = 1.02;
    double wall_extended = 1.005;
    double xi0_max = 1e6;
};

/**
 * Inverse shape problem: find the prolate spheroid whose doubled
 * spectrum decays with the requested leading coefficient, by bisection
 * on the (sampled, validated) decreasing map xi0 -> 2*C~(xi0).
 *
 * target == 1/2 is the equality case and returns the tagged sphere
 * limit; anything below 1/2 + 1e-6, or above the value at the xi0
 * wall, has no bracket.
 */
inline SpheroidShape solve_xi0(double target_C, SolveOptions opt = {}) {
    const auto doubled_coeff = [&](double xi0) {
        return 2.0 * weyl_coeff_from_willmore(willmore_energy(SpheroidShape::of(xi0), opt.willmore));
    };
    if (!(target_C >= 0.5))
        throw BracketNotFound("target " + std::to_string(target_C) +
                              " is below the minimum coefficient 1/2");
    if (target_C == 0.5) return SpheroidShape::sphere();
    if (target_C < 0.5 + 1e-6)
        throw BracketNotFound("target indistinguishable from the sphere limit 1/2");

    const double wall =
        (opt.precision == Precision::Extended) ? opt.wall_extended : opt.wall_double;

    // the map must be decreasing before bisection is meaningful
    double prev = doubled_coeff(wall);
    for (double x : {wall * 1.5, 2.0, 3.0, 10.0, 100.0, 10000.0}) {
        const double cur = doubled_coeff(x);
        if (!(cur < prev))
            throw NonMonotoneMap("2*C~ not decreasing between sampled xi0 values near " +
                                 std::to_string(x));
        prev = cur;
    }

    if (target_C > doubled_coeff(wall))
        throw BracketNotFound("target " + std::to_string(target_C) +
                              " exceeds the coefficient at the xi0 precision wall " +
                              std::to_string(wall));

    // bracket by doubling/halving from xi0 = 2
    double lo = wall, hi = 2.0;
    while (doubled_coeff(hi) > target_C) {
        lo = hi;
        hi *= 2.0;
        if (hi > opt.xi0_max)
            throw BracketNotFound("no xi0 below " + std::to_string(opt.xi0_max) +
                                  " reaches down to the target");
    }
    // f(lo) >= target >= f(hi), f decreasing in xi0
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double val = doubled_coeff(mid);
        if (std::abs(val - target_C) < opt.value_tol) return SpheroidShape::of(mid);
        if (val > target_C)
            lo = mid;
        else
            hi = mid;
    }
    throw PrecisionLoss("bisection failed to reach the value tolerance");
}

}  // namespace oddpart::np
