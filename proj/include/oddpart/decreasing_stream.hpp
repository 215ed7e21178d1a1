#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "oddpart/errors.hpp"
#include "oddpart/family.hpp"

namespace oddpart {

struct StreamOptions {
    // Rows the cursor may expand past the frontier before deciding the
    // family cannot be enumerated in decreasing order.
    long row_budget = 1'000'000;
    // Hard cap on pending heap entries; families whose small values
    // vastly outnumber their large ones blow this before the row budget.
    std::size_t max_pending = std::size_t(1) << 26;
};

template <class Scalar>
struct Emitted {
    Scalar value;
    long origin_n = 0;  // row index
    long origin_k = 0;  // 1-based position inside the row
};

/**
 * Sequential cursor over the merged multiset of all row lengths, in
 * non-increasing order with (N, k)-lexicographic tie-breaking.
 *
 * Rows are expanded lazily: before emitting the current maximum v the
 * frontier advances until ub(frontier) <= v, so no later row can hold
 * anything larger. The ub contract makes this exact.
 */
template <class Scalar>
class DecreasingStream {
public:
    explicit DecreasingStream(const PartitionFamily<Scalar>& family, StreamOptions opt = {})
        : family_(family), opt_(opt) {}

    Emitted<Scalar> next() {
        long expanded = 0;
        while (heap_.empty() || ub_frontier_ > heap_.top().value) {
            expand_row();
            if (++expanded > opt_.row_budget)
                throw StalledStream("family '" + family_.name() +
                                    "': ub did not drop below the pending maximum "
                                    "within the row budget");
            if (heap_.size() > opt_.max_pending)
                throw BudgetExceeded("family '" + family_.name() +
                                     "': pending queue exceeded max_pending");
        }
        Entry e = heap_.top();
        heap_.pop();
        ++emitted_;
        return {std::move(e.value), e.n, e.k};
    }

    std::uint64_t emitted() const { return emitted_; }
    long frontier() const { return frontier_; }

private:
    struct Entry {
        Scalar value;
        long n;
        long k;
    };
    struct Less {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.value != b.value) return a.value < b.value;
            if (a.n != b.n) return a.n > b.n;
            return a.k > b.k;
        }
    };

    void expand_row() {
        const long n = frontier_;
        const Scalar cur_ub = (n == 0) ? family_.ub(0) : ub_frontier_;
        if (n > 0 && cur_ub > prev_ub_)
            throw FamilyConstructionError("family '" + family_.name() +
                                          "': ub increased at row " + std::to_string(n));
        prev_ub_ = cur_ub;
        auto row = family_.row(n);
        long k = 1;
        for (const Scalar& v : row->lengths) heap_.push(Entry{v, n, k++});
        ++frontier_;
        ub_frontier_ = family_.ub(frontier_);
    }

    const PartitionFamily<Scalar>& family_;
    StreamOptions opt_;
    std::priority_queue<Entry, std::vector<Entry>, Less> heap_;
    long frontier_ = 0;
    Scalar ub_frontier_{};
    Scalar prev_ub_{};
    std::uint64_t emitted_ = 0;
};

/// First `count` elements of the decreasing enumeration, with provenance.
template <class Scalar>
std::vector<Emitted<Scalar>> enumerate(const PartitionFamily<Scalar>& family, std::uint64_t count,
                                       StreamOptions opt = {}) {
    if (count < 1) throw ArgumentOutOfDomain("enumerate needs count >= 1");
    DecreasingStream<Scalar> stream(family, opt);
    std::vector<Emitted<Scalar>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(stream.next());
    return out;
}

/// (j, sqrt(j) * a_j) for the requested ascending j values; a_j exact
/// via the stream.
template <class Scalar>
std::vector<std::pair<std::uint64_t, double>> c_sequence(const PartitionFamily<Scalar>& family,
                                                         const std::vector<std::uint64_t>& j_values,
                                                         StreamOptions opt = {}) {
    if (j_values.empty()) return {};
    for (std::size_t i = 1; i < j_values.size(); ++i)
        if (j_values[i] < j_values[i - 1])
            throw ArgumentOutOfDomain("c_sequence wants ascending j values");
    if (j_values.front() < 1) throw ArgumentOutOfDomain("j values are 1-based");
    DecreasingStream<Scalar> stream(family, opt);
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(j_values.size());
    std::uint64_t j = 0;
    std::size_t idx = 0;
    while (idx < j_values.size()) {
        auto e = stream.next();
        ++j;
        while (idx < j_values.size() && j_values[idx] == j) {
            out.emplace_back(j, std::sqrt(static_cast<double>(j)) * to_double(e.value));
            ++idx;
        }
    }
    return out;
}

}  // namespace oddpart
