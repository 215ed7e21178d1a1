#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "oddpart/decreasing_stream.hpp"
#include "oddpart/errors.hpp"
#include "oddpart/family.hpp"

namespace oddpart::analysis {

struct Window {
    std::uint64_t j_lo = 0, j_hi = 0;
};

struct WindowInfimum {
    Window window;
    double inf_c = 0;  // inf over the window of sqrt(j) * a_j
};

/// Exact infimum of c_j = sqrt(j) a_j over each window, by one full
/// enumeration pass (every j is visited, no sampling). Odd families
/// only; the general kind has no 1/2 threshold to probe.
template <class Scalar>
std::vector<WindowInfimum> liminf_probe(const PartitionFamily<Scalar>& family,
                                        const std::vector<Window>& windows,
                                        StreamOptions opt = {}) {
    if (family.kind() != FamilyKind::Odd)
        throw ArgumentOutOfDomain("liminf probes are for odd families only");
    if (windows.empty()) return {};
    std::uint64_t j_max = 0;
    for (const auto& w : windows) {
        if (w.j_lo < 1 || w.j_lo > w.j_hi) throw ArgumentOutOfDomain("bad liminf window");
        j_max = std::max(j_max, w.j_hi);
    }
    std::vector<WindowInfimum> out;
    out.reserve(windows.size());
    for (const auto& w : windows)
        out.push_back({w, std::numeric_limits<double>::infinity()});
    DecreasingStream<Scalar> stream(family, opt);
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        const double a = to_double(stream.next().value);
        const double c = std::sqrt(static_cast<double>(j)) * a;
        for (auto& r : out)
            if (j >= r.window.j_lo && j <= r.window.j_hi) r.inf_c = std::min(r.inf_c, c);
    }
    return out;
}

}  // namespace oddpart::analysis
