#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "oddpart/family.hpp"
#include "oddpart/np/spheroid.hpp"
#include "oddpart/partition_row.hpp"

namespace oddpart::families {

/// Degree n of the spheroid spectrum as a partition row: the 2n+1
/// eigenvalues lambda_{n,m}, sorted descending. Raw rows partition
/// [0, 1/2]; doubled rows scale onto the unit interval. The trace
/// identity is enforced on every produced row.
inline PartitionRow<double> spheroid_row_from(const np::SpheroidSpectrum& spectrum, long n,
                                              bool doubled) {
    auto block = spectrum.degree_block(n);
    std::sort(block.begin(), block.end(), std::greater<>());
    PartitionRow<double> row;
    row.order = n;
    row.target_sum = doubled ? 1.0 : 0.5;
    row.lengths = std::move(block);
    if (doubled)
        for (double& v : row.lengths) v *= 2.0;
    double acc = 0.0, comp = 0.0;
    for (double v : row.lengths) {
        const double t = acc + v;
        comp += (std::abs(acc) >= std::abs(v)) ? (acc - t) + v : (v - t) + acc;
        acc = t;
    }
    const double residual = std::abs(acc + comp - row.target_sum);
    if (residual > 1e-8)
        throw TraceIdentityViolation("degree " + std::to_string(n) + " row sums to " +
                                     std::to_string(acc + comp) + " (residual " +
                                     std::to_string(residual) + ")");
    return row;
}

inline PartitionRow<double> spheroid_row(double xi0, long n, bool doubled,
                                         np::SpectrumOptions opt = {}) {
    opt.n_cap = std::max(opt.n_cap, n);
    np::SpheroidSpectrum spectrum(xi0, opt);
    return spheroid_row_from(spectrum, n, doubled);
}

inline FloatFamily::Config spheroid_family_config(double xi0, bool doubled,
                                                  np::SpectrumOptions opt = {}) {
    auto spectrum = std::make_shared<np::SpheroidSpectrum>(xi0, opt);
    const double scale = doubled ? 2.0 : 1.0;
    FloatFamily::Config cfg;
    cfg.kind = FamilyKind::Odd;
    cfg.name = (doubled ? "spheroid2:xi0=" : "spheroid:xi0=") + std::to_string(xi0);
    cfg.row_sum_tol = 1e-8;
    cfg.row_fn = [spectrum, doubled](long n) { return spheroid_row_from(*spectrum, n, doubled); };
    cfg.ub_fn = [spectrum, scale](long n) { return scale * spectrum->row_max(n); };
    cfg.ub_sample_limit = 16;  // spectral rows are costly; sample shallow
    return cfg;
}

inline FloatFamily make_spheroid_family(double xi0, bool doubled, np::SpectrumOptions opt = {}) {
    return FloatFamily(spheroid_family_config(xi0, doubled, opt));
}

}  // namespace oddpart::families
