#pragma once

#include <cstdint>

#include "oddpart/family.hpp"

namespace oddpart::families {

/// Row N of the equi family: 2N+1 copies of 1/(2N+1).
inline PartitionRow<Rational> equi_row(long n) {
    PartitionRow<Rational> row;
    row.order = n;
    row.target_sum = 1;
    row.lengths.assign(static_cast<std::size_t>(2 * n + 1), Rational(1, 2 * n + 1));
    return row;
}

/// j-th largest length across the whole equi diagram: 1/(2*ceil(sqrt(j))-1).
inline Rational equi_nth_value(std::uint64_t j) {
    const auto r = ceil_isqrt(j);
    return Rational(1, 2 * static_cast<long long>(r) - 1);
}

inline ExactFamily::Config equi_family_config() {
    ExactFamily::Config cfg;
    cfg.kind = FamilyKind::Odd;
    cfg.name = "equi";
    cfg.row_fn = equi_row;
    cfg.ub_fn = [](long n) { return Rational(1, 2 * n + 1); };
    cfg.nth_value_fn = equi_nth_value;
    cfg.tail_coef = 1.0;
    return cfg;
}

inline ExactFamily make_equi_family() { return ExactFamily(equi_family_config()); }

}  // namespace oddpart::families
