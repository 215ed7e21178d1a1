#pragma once

#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "oddpart/errors.hpp"
#include "oddpart/partition_row.hpp"

namespace oddpart {

/**
 * An infinite partition diagram: a pure row producer `N -> row` plus a
 * claimed upper bound `ub(N)` on the largest length of row N. The ub
 * contract (non-increasing, ub -> 0, dominating each produced row) is
 * what makes decreasing enumeration of the whole diagram well defined;
 * it is validated by sampling at construction and rechecked lazily as
 * rows are produced.
 *
 * Rows are cached behind a small LRU so that expensive producers
 * (spectral rows) are not recomputed; producers must be pure, and a
 * family is safe to share across threads once constructed.
 */
template <class Scalar>
class PartitionFamily {
public:
    using Row = PartitionRow<Scalar>;
    using RowPtr = std::shared_ptr<const Row>;

    struct Config {
        FamilyKind kind = FamilyKind::Odd;
        std::string name;
        double row_sum_tol = 0.0;  // 0 for exact scalars
        std::function<Row(long)> row_fn;
        std::function<Scalar(long)> ub_fn;
        // Optional exact rank selection (1-based j -> j-th largest length of
        // the whole diagram), for families where counting beats merging.
        std::function<Scalar(std::uint64_t)> nth_value_fn;
        // Optional A with ub(N) <= A/(2N+1) for all N; used for tail bounds.
        std::optional<double> tail_coef;
        std::size_t cache_capacity = 10'000;
        long ub_sample_limit = 1024;  // families with costly rows lower this
        bool equi_tail_extended = false;
    };

    explicit PartitionFamily(Config cfg) : cfg_(std::move(cfg)) {
        if (!cfg_.row_fn || !cfg_.ub_fn)
            throw FamilyConstructionError("family '" + cfg_.name +
                                          "' needs both a row producer and a ub");
        validate_ub_by_sampling();
    }

    const std::string& name() const { return cfg_.name; }
    FamilyKind kind() const { return cfg_.kind; }
    double row_sum_tol() const { return cfg_.row_sum_tol; }
    bool equi_tail_extended() const { return cfg_.equi_tail_extended; }
    std::optional<double> tail_coef() const { return cfg_.tail_coef; }
    bool has_nth_value() const { return static_cast<bool>(cfg_.nth_value_fn); }

    Scalar nth_value(std::uint64_t j) const {
        if (!cfg_.nth_value_fn)
            throw ArgumentOutOfDomain("family '" + cfg_.name + "' has no rank oracle");
        return cfg_.nth_value_fn(j);
    }

    Scalar ub(long n) const { return cfg_.ub_fn(n); }

    /// Validated row, via the LRU cache.
    RowPtr row(long n) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(n);
            if (it != cache_.end()) {
                lru_.splice(lru_.begin(), lru_, it->second.second);
                return it->second.first;
            }
        }
        RowPtr fresh = std::make_shared<Row>(make_row(n));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second.first;
        lru_.push_front(n);
        cache_.emplace(n, std::make_pair(fresh, lru_.begin()));
        if (cache_.size() > cfg_.cache_capacity) {
            cache_.erase(lru_.back());
            lru_.pop_back();
        }
        return fresh;
    }

    /// Validated row bypassing the cache (for one-pass scans).
    Row row_uncached(long n) const { return make_row(n); }

private:
    Row make_row(long n) const {
        Row r = cfg_.row_fn(n);
        validate_row(r, cfg_.row_sum_tol, cfg_.kind);
        const Scalar bound = cfg_.ub_fn(n);
        for (const Scalar& v : r.lengths)
            if (v > bound)
                throw UbViolation("family '" + cfg_.name + "' row " + std::to_string(n) +
                                  " exceeds its claimed bound");
        return r;
    }

    void validate_ub_by_sampling() const {
        Scalar prev = cfg_.ub_fn(0);
        if (!(prev > Scalar(0)))
            throw FamilyConstructionError("ub(0) must be positive in '" + cfg_.name + "'");
        Scalar first = prev;
        for (long n = 1; n <= cfg_.ub_sample_limit; n *= 2) {
            Scalar cur = cfg_.ub_fn(n);
            if (cur > prev)
                throw FamilyConstructionError("ub not non-increasing in '" + cfg_.name +
                                              "' near N=" + std::to_string(n));
            prev = cur;
        }
        if (!(prev < first))
            throw FamilyConstructionError("ub shows no decay in '" + cfg_.name +
                                          "' over the sampled range");
    }

    Config cfg_;
    mutable std::mutex mu_;
    mutable std::list<long> lru_;
    mutable std::unordered_map<long, std::pair<RowPtr, std::list<long>::iterator>> cache_;
};

using ExactFamily = PartitionFamily<Rational>;
using FloatFamily = PartitionFamily<double>;

}  // namespace oddpart
