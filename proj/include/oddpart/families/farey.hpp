#pragma once

#include <cstdint>
#include <vector>

#include "oddpart/family.hpp"

namespace oddpart::families {

/// Consecutive differences of the Farey sequence F_order on [0, 1].
/// Exact rationals; sum is 1; the largest gap is 1/order.
inline PartitionRow<Rational> farey_row(long order) {
    if (order < 1) throw ArgumentOutOfDomain("farey_row needs order >= 1");
    PartitionRow<Rational> row;
    row.order = order;
    row.target_sum = 1;
    // next-term recurrence over F_order
    long long a = 0, b = 1, c = 1, d = order;
    while (c <= order) {
        row.lengths.emplace_back(Rational(c, d) - Rational(a, b));
        const long long k = (order + b) / d;
        const long long a2 = c, b2 = d;
        c = k * c - a;
        d = k * d - b;
        a = a2;
        b = b2;
        if (a == 1 && b == 1) break;
    }
    return row;
}

namespace detail {

/// Squarefree divisors of a with their Moebius signs.
inline std::vector<std::pair<std::uint64_t, int>> mobius_divisors(std::uint64_t a) {
    std::vector<std::uint64_t> primes;
    std::uint64_t x = a;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) {
            primes.push_back(d);
            while (x % d == 0) x /= d;
        }
    if (x > 1) primes.push_back(x);
    std::vector<std::pair<std::uint64_t, int>> divs{{1, 1}};
    for (std::uint64_t p : primes) {
        const std::size_t sz = divs.size();
        for (std::size_t i = 0; i < sz; ++i) divs.emplace_back(divs[i].first * p, -divs[i].second);
    }
    return divs;
}

inline std::uint64_t coprime_upto(std::uint64_t a, std::uint64_t x) {
    long long total = 0;
    for (auto [d, s] : mobius_divisors(a)) total += s * static_cast<long long>(x / d);
    return static_cast<std::uint64_t>(total);
}

}  // namespace detail

/**
 * Number of gaps of size >= 1/K across all Farey rows.
 *
 * The gap between neighbours with denominators (q1, q2) is 1/(q1 q2),
 * each ordered coprime pair occurring as a neighbour pair in exactly
 * min(q1, q2) orders. Counting such pairs with q1 q2 <= K gives the
 * rank of 1/K in the merged diagram without producing any rows.
 */
inline std::uint64_t farey_rank_count(std::uint64_t K) {
    if (K < 1) return 0;
    std::uint64_t total = 1;      // the (1,1) gap of F_1
    total += 2 * (K - 1);         // pairs (1, b), b in (1, K]
    for (std::uint64_t a = 2; a * a <= K; ++a) {
        const std::uint64_t bmax = K / a;
        if (bmax <= a) break;
        const std::uint64_t c = detail::coprime_upto(a, bmax) - detail::coprime_upto(a, a);
        total += 2 * a * c;
    }
    return total;
}

/// j-th largest Farey gap, by binary search on the rank count.
inline Rational farey_nth_value(std::uint64_t j) {
    std::uint64_t lo = 1, hi = 4;
    while (farey_rank_count(hi) < j) hi *= 2;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (farey_rank_count(mid) >= j)
            hi = mid;
        else
            lo = mid + 1;
    }
    return Rational(1, static_cast<long long>(lo));
}

inline ExactFamily::Config farey_family_config() {
    ExactFamily::Config cfg;
    cfg.kind = FamilyKind::General;
    cfg.name = "farey";
    cfg.row_fn = [](long n) { return farey_row(n + 1); };  // row index N -> order N+1
    cfg.ub_fn = [](long n) { return Rational(1, n + 1); };
    cfg.nth_value_fn = farey_nth_value;
    return cfg;
}

inline ExactFamily make_farey_family() { return ExactFamily(farey_family_config()); }

}  // namespace oddpart::families
