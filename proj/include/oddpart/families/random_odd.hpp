#pragma once

#include <cstdint>

#include "oddpart/family.hpp"

namespace oddpart::families {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/**
 * Seeded random odd family for property tests.
 *
 * Row N mixes the equi row with a normalized sample of 2N+1 integers
 * drawn uniformly from [D, 2D):
 *
 *   l_k = w/(2N+1) + (1-w) * u_k / sum(u),   w = conc/(1+conc).
 *
 * Everything is exact rational, so row sums are exactly 1. The bounded
 * ratio of the draws gives the hard envelope max(row N) <= (2-w)/(2N+1),
 * which serves as the family ub. Large concentration collapses the rows
 * onto the equi family. Row N draws its substream from hash(seed, N),
 * so rows are computable independently in any order.
 */
class RandomOddSampler {
public:
    RandomOddSampler(std::uint64_t seed, Rational concentration)
        : seed_(seed), conc_(std::move(concentration)) {
        if (!(conc_ > 0)) throw ArgumentOutOfDomain("concentration must be > 0");
        weight_ = conc_ / (1 + conc_);
    }

    PartitionRow<Rational> row(long n) const {
        const long m = 2 * n + 1;
        PartitionRow<Rational> out;
        out.order = n;
        out.target_sum = 1;
        out.lengths.reserve(m);
        std::vector<std::uint64_t> draws(m);
        std::uint64_t acc = 0;
        for (long k = 0; k < m; ++k) {
            const std::uint64_t h = detail::splitmix64(
                detail::splitmix64(seed_ ^ (0x51a7b031ULL + static_cast<std::uint64_t>(n))) +
                static_cast<std::uint64_t>(k));
            draws[k] = kDrawBase + (h % kDrawBase);
            acc += draws[k];
        }
        const Rational base = weight_ / m;
        const Rational rest = 1 - weight_;
        for (long k = 0; k < m; ++k)
            out.lengths.emplace_back(base + rest * Rational(draws[k], acc));
        return out;
    }

    Rational ub(long n) const { return (2 - weight_) / (2 * n + 1); }

private:
    static constexpr std::uint64_t kDrawBase = 1ULL << 20;
    std::uint64_t seed_;
    Rational conc_;
    Rational weight_;
};

inline ExactFamily::Config random_odd_family_config(std::uint64_t seed, Rational concentration) {
    auto sampler = std::make_shared<RandomOddSampler>(seed, std::move(concentration));
    ExactFamily::Config cfg;
    cfg.kind = FamilyKind::Odd;
    cfg.name = "random:seed=" + std::to_string(seed);
    cfg.row_fn = [sampler](long n) { return sampler->row(n); };
    cfg.ub_fn = [sampler](long n) { return sampler->ub(n); };
    cfg.tail_coef = 2.0;  // (2-w)/(2N+1) <= 2/(2N+1)
    return cfg;
}

inline ExactFamily make_random_odd_family(std::uint64_t seed, Rational concentration) {
    return ExactFamily(random_odd_family_config(seed, std::move(concentration)));
}

}  // namespace oddpart::families
