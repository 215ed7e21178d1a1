#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/rational.hpp"

namespace oddpart {

enum class FamilyKind { Odd, General };

/// One row of a partition diagram: positive lengths that sum to
/// `target_sum` (1 for unit-interval families, 1/2 for raw spectral
/// rows). For odd-kind rows of order N there are exactly 2N+1 lengths.
template <class Scalar>
struct PartitionRow {
    long order = 0;
    std::vector<Scalar> lengths;
    Scalar target_sum{};
};

template <class Scalar>
constexpr bool is_exact_scalar = !std::is_floating_point_v<Scalar>;

namespace detail {

inline double neumaier_sum(const std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

}  // namespace detail

/// Checks the row invariants and returns the row unchanged. A sum
/// mismatch is an error, never silently renormalized.
template <class Scalar>
const PartitionRow<Scalar>& validate_row(const PartitionRow<Scalar>& row, double tol,
                                         FamilyKind kind = FamilyKind::Odd) {
    if (tol < 0) throw ArgumentOutOfDomain("row_sum_tol must be >= 0");
    if (row.lengths.empty()) throw WrongCardinality("row has no lengths");
    for (const Scalar& v : row.lengths)
        if (!(v > Scalar(0)))
            throw NonPositiveLength("row " + std::to_string(row.order) +
                                    " contains a non-positive length");
    if (kind == FamilyKind::Odd &&
        row.lengths.size() != static_cast<std::size_t>(2 * row.order + 1))
        throw WrongCardinality("odd row " + std::to_string(row.order) + " has " +
                               std::to_string(row.lengths.size()) + " lengths, expected " +
                               std::to_string(2 * row.order + 1));
    if constexpr (is_exact_scalar<Scalar>) {
        Scalar sum{0};
        for (const Scalar& v : row.lengths) sum += v;
        if (sum != row.target_sum)
            throw SumMismatch("row " + std::to_string(row.order) + " sums to " +
                              rational_to_string(sum) + ", expected " +
                              rational_to_string(row.target_sum));
    } else {
        std::vector<double> xs(row.lengths.begin(), row.lengths.end());
        const double sum = detail::neumaier_sum(xs);
        if (std::abs(sum - static_cast<double>(row.target_sum)) > tol)
            throw SumMismatch("row " + std::to_string(row.order) + " sums to " +
                              std::to_string(sum) + ", |residual| > tol");
    }
    return row;
}

/// Slack in the per-row Hoelder bound:
///   sum_k |L_k|^p - count^{1-p} * T^p.
/// Non-negative for every valid row, zero exactly on equi-rows.
template <class Scalar>
double row_holder_margin(const PartitionRow<Scalar>& row, double p) {
    if (!(p > 1.0)) throw InvalidExponent("row_holder_margin requires p > 1");
    const double n = static_cast<double>(row.lengths.size());
    const double T = to_double(row.target_sum);
    if constexpr (is_exact_scalar<Scalar>) {
        // integer p on exact rows: do the arithmetic exactly
        if (p == std::floor(p) && p < 64) {
            const auto ip = static_cast<unsigned>(p);
            Scalar sum{0};
            for (const Scalar& v : row.lengths) {
                Scalar pw{1};
                for (unsigned i = 0; i < ip; ++i) pw *= v;
                sum += pw;
            }
            Scalar tp{1};
            for (unsigned i = 0; i < ip; ++i) tp *= row.target_sum;
            Scalar cnt{static_cast<long>(row.lengths.size())};
            Scalar bound = tp;
            for (unsigned i = 0; i + 1 < ip; ++i) bound /= cnt;
            return to_double(Scalar(sum - bound));
        }
    }
    std::vector<double> terms;
    terms.reserve(row.lengths.size());
    for (const Scalar& v : row.lengths) terms.push_back(std::pow(to_double(v), p));
    double margin = detail::neumaier_sum(terms) - std::pow(n, 1.0 - p) * std::pow(T, p);
    const double scale = std::pow(T, p);
    if (margin < 0 && margin > -1e-12 * scale) margin = 0.0;  // rounding only
    return margin;
}

}  // namespace oddpart
