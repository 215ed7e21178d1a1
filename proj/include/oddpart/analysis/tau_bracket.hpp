#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "oddpart/errors.hpp"
#include "oddpart/family.hpp"
#include "oddpart/specfun/zeta.hpp"

namespace oddpart::analysis {

/// Two-sided enclosure of tau(p), the sum of p-th powers of all lengths
/// of an odd family, against the reference bound (1-2^{1-p}) zeta(p-1).
struct TauBracket {
    double p = 0;
    double lower = 0;
    double upper = 0;
    long rows_used = 0;
    double bound_ref = 0;
};

/**
 * lower: explicit row sums for N < rows plus the per-row Hoelder tail
 *        sum_{N >= rows} (2N+1)^{1-p} (every odd row obeys it);
 * upper: the same partial sum plus sum_{N >= rows} (2N+1) ub(N)^p,
 *        bounded through the envelope ub(N) <= A/(2N+1).
 * Both tails are Euler-Maclaurin evaluations of Hurwitz zeta.
 */
template <class Scalar>
TauBracket tau_bracket(const PartitionFamily<Scalar>& family, double p, long rows) {
    if (!(p > 2.0))
        throw InvalidExponent("tau may diverge for p <= 2; refusing a finite bracket");
    if (rows < 1) throw ArgumentOutOfDomain("tau_bracket needs rows >= 1");
    if (family.kind() != FamilyKind::Odd)
        throw ArgumentOutOfDomain("tau is defined for odd families only");

    double partial = 0.0, comp = 0.0;
    for (long n = 0; n < rows; ++n) {
        const auto row = family.row_uncached(n);
        for (const Scalar& v : row.lengths) {
            const double x = std::pow(to_double(v), p);
            const double t = partial + x;
            comp += (std::abs(partial) >= std::abs(x)) ? (partial - t) + x : (x - t) + partial;
            partial = t;
        }
    }
    partial += comp;

    const double tail_lower = specfun::odd_power_tail(p - 1.0, rows);

    double A;
    if (family.tail_coef()) {
        A = *family.tail_coef();
    } else {
        // sampled envelope with a small safety factor
        A = 0.0;
        for (long n = rows, step = std::max(1L, rows / 16), i = 0; i < 32; ++i, n += step)
            A = std::max(A, to_double(family.ub(n)) * (2.0 * n + 1.0));
        A *= 1.05;
    }
    const double tail_upper = std::pow(A, p) * tail_lower;

    TauBracket out;
    out.p = p;
    out.rows_used = rows;
    out.lower = partial + tail_lower;
    out.upper = partial + tail_upper;
    out.bound_ref = specfun::tau_zeta_bound(p);
    return out;
}

}  // namespace oddpart::analysis
