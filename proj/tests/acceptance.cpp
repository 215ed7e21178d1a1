// Acceptance suite: every release criterion of the library, each with
// its tolerance pinned in code, one PASS/FAIL line per criterion.
// Exits nonzero if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <vector>

#include "oddpart/analysis/decay_fit.hpp"
#include "oddpart/analysis/gamma_limit.hpp"
#include "oddpart/analysis/liminf.hpp"
#include "oddpart/analysis/tau_bracket.hpp"
#include "oddpart/decreasing_stream.hpp"
#include "oddpart/families/equi.hpp"
#include "oddpart/families/farey.hpp"
#include "oddpart/families/random_odd.hpp"
#include "oddpart/families/spheroid.hpp"
#include "oddpart/np/nystrom.hpp"
#include "oddpart/np/solve_xi0.hpp"
#include "oddpart/np/weyl.hpp"
#include "oddpart/specfun/legendre.hpp"

using namespace oddpart;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ------------------------------------------------------------------
// 1 + 2. Equi exactness over 1e6 terms, the fitted optimal coefficient
// and the exact scaled subsequence c_{N^2} = N/(2N-1).

void criteria_equi() {
    auto fam = families::make_equi_family();
    const auto t0 = std::chrono::steady_clock::now();
    bool exact = true;
    std::vector<Rational> at_squares(1001);
    {
        DecreasingStream<Rational> stream(fam);
        for (std::uint64_t j = 1; j <= 1000000; ++j) {
            auto e = stream.next();
            if (e.value != families::equi_nth_value(j)) {
                exact = false;
                break;
            }
            const auto r = ceil_isqrt(j);
            if (r * r == j && r <= 1000) at_squares[r] = e.value;
        }
    }
    const double elapsed = seconds_since(t0);
    report(1, "equi sequence exactness over 1e6 terms", exact && elapsed < 30.0,
           std::string(exact ? "all equal 1/(2 ceil sqrt j - 1)" : "MISMATCH") + ", " +
               fmt(elapsed) + "s (< 30s)");

    auto fit = analysis::decay_fit(fam, 1000, 1000000);
    bool squares_exact = true;
    for (long N = 1; N <= 1000; ++N)
        if (Rational(N) * at_squares[N] != Rational(N, 2 * N - 1)) squares_exact = false;
    const bool ok = std::abs(fit.alpha_hat + 0.5) <= 0.01 && std::abs(fit.C_hat - 0.5) <= 0.01 &&
                    squares_exact;
    report(2, "optimal coefficient of the equi family", ok,
           "alpha_hat=" + fmt(fit.alpha_hat) + " (-0.5 +- 0.01), C_hat=" + fmt(fit.C_hat) +
               " (0.5 +- 0.01), c_{N^2} exact for N <= 1000: " +
               (squares_exact ? "yes" : "NO"));
}

// ------------------------------------------------------------------
// 3. The tau(p) enclosure: equality on equi, inequality on 100 random
// odd families.

void criterion_tau() {
    const auto t0 = std::chrono::steady_clock::now();
    auto equi = families::make_equi_family();
    auto br = analysis::tau_bracket(equi, 3.0, 10000);
    const double ref = specfun::kPi * specfun::kPi / 8;
    bool ok = br.lower <= ref && ref <= br.upper && (br.upper - br.lower) < 1e-7 &&
              br.lower >= br.bound_ref - 1e-12;
    std::string detail = "equi p=3: width=" + fmt(br.upper - br.lower) + " (< 1e-7), margin=" +
                         fmt(br.lower - br.bound_ref) + " (>= -1e-12)";
    int violations = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto fam = families::make_random_odd_family(seed, Rational(1 + seed % 7));
        for (double p : {2.5, 3.0, 4.0}) {
            auto b = analysis::tau_bracket(fam, p, 120);
            if (!(b.lower >= b.bound_ref - 1e-12)) ++violations;
        }
    }
    const double elapsed = seconds_since(t0);
    ok = ok && violations == 0 && elapsed < 60.0;
    report(3, "tau(p) bracket vs the zeta bound", ok,
           detail + "; random violations=" + std::to_string(violations) + "/300, " + fmt(elapsed) +
               "s (< 60s)");
}

// ------------------------------------------------------------------
// 4. The gamma limit.

void criterion_gamma() {
    std::vector<double> ps;
    for (int k = 3; k <= 10; ++k) ps.push_back(2.0 + std::exp2(-k));
    auto probe = analysis::gamma_limit_probe(ps);
    const double target = analysis::gamma_limit_target();
    const double err = std::abs(probe.extrapolated - target);
    report(4, "gamma limit of the zeta tail bound", err < 1e-6,
           "extrapolated=" + fmt(probe.extrapolated) + ", target=" + fmt(target) +
               ", |err|=" + fmt(err) + " (< 1e-6)");
}

// ------------------------------------------------------------------
// 5. Trace identity across shapes and degrees.

void criterion_trace() {
    double worst = 0.0;
    for (double xi0 : {1.05, 1.5, 3.0, 10.0}) {
        np::SpheroidSpectrum spec(xi0, {});
        for (long n = 0; n <= 30; ++n) {
            auto block = spec.degree_block(n);
            const double sum = std::accumulate(block.begin(), block.end(), 0.0);
            worst = std::max(worst, std::abs(sum - 0.5));
        }
    }
    report(5, "spheroid trace identity (n <= 30, four shapes)", worst < 1e-10,
           "worst |row sum - 1/2| = " + fmt(worst) + " (< 1e-10)");
}

// ------------------------------------------------------------------
// 6. Sphere gates and the Nystrom cross-check.

void criterion_sphere_gates() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_limit = 0.0;
    for (long n = 0; n <= 5; ++n)
        for (long m = 0; m <= n; ++m)
            worst_limit = std::max(worst_limit,
                                   std::abs(np::np_eigenvalue(np::SpheroidShape::of(1000.0), n, m) -
                                            0.5 / (2 * n + 1)));

    np::NystromOptions sphere_opt;
    sphere_opt.mesh_size = 576;
    sphere_opt.top_k = 9;
    auto sphere_eigs = np::nystrom_eigenvalues(np::SpheroidShape::sphere(), sphere_opt);
    double worst_sphere = std::abs(sphere_eigs[0] - 0.5);
    for (int i = 1; i <= 3; ++i)
        worst_sphere = std::max(worst_sphere, std::abs(sphere_eigs[i] - 1.0 / 6));
    for (int i = 4; i <= 8; ++i)
        worst_sphere = std::max(worst_sphere, std::abs(sphere_eigs[i] - 0.1));

    np::NystromOptions sph_opt;
    sph_opt.mesh_size = 784;
    sph_opt.top_k = 9;
    auto oracle = np::nystrom_eigenvalues(np::SpheroidShape::of(1.5), sph_opt);
    np::SpheroidSpectrum spec(1.5, {});
    std::vector<double> formula;
    for (long n = 0; n <= 16; ++n)
        for (long m = -n; m <= n; ++m) formula.push_back(spec.eigenvalue(n, m));
    std::sort(formula.begin(), formula.end(), std::greater<>());
    double worst_oracle = 0.0;
    for (int i = 0; i < 9; ++i)
        worst_oracle = std::max(worst_oracle, std::abs(oracle[i] - formula[i]));

    const double elapsed = seconds_since(t0);
    const bool ok =
        worst_limit < 1e-4 && worst_sphere < 1e-2 && worst_oracle < 1e-2 && elapsed < 300.0;
    report(6, "sphere limits and the Nystrom oracle", ok,
           "sphere-limit err=" + fmt(worst_limit) + " (< 1e-4), sphere oracle err=" +
               fmt(worst_sphere) + " (< 1e-2), xi0=1.5 top-9 err=" + fmt(worst_oracle) +
               " (< 1e-2), " + fmt(elapsed) + "s (< 300s)");
}

// ------------------------------------------------------------------
// 7. The Weyl law: empirical stream coefficient vs the Willmore
// formula, plus the exact sphere value.

void criterion_weyl() {
    bool ok = true;
    std::string detail;
    for (double xi0 : {1.2, 1.5, 3.0}) {
        const double willmore = np::willmore_energy(np::SpheroidShape::of(xi0));
        const double ref = 2.0 * np::weyl_coeff_from_willmore(willmore);
        auto fam = families::make_spheroid_family(xi0, true, {});
        auto fit = analysis::decay_fit(fam, 1000, 10000);
        const double rel = std::abs(fit.C_hat - ref) / ref;
        ok = ok && rel < 0.02;
        detail += "xi0=" + fmt(xi0) + ": C_hat=" + fmt(fit.C_hat) + " vs 2C~=" + fmt(ref) +
                  " rel=" + fmt(rel) + "; ";
    }
    const double sphere_coeff =
        np::weyl_coeff_from_willmore(np::willmore_energy(np::SpheroidShape::of(1e9)));
    const double sphere_err = std::abs(sphere_coeff - 0.25);
    ok = ok && sphere_err < 1e-10;
    report(7, "Weyl coefficient from the Willmore energy", ok,
           detail + "sphere coeff err=" + fmt(sphere_err) + " (< 1e-10; within 2% elsewhere)");
}

// ------------------------------------------------------------------
// 8. The constructive statement at desk scale: prescribed coefficients
// are realized by solved shapes; below 1/2 there is no shape.

void criterion_solve() {
    bool ok = true;
    std::string detail;
    for (double target : {0.55, 0.8, 1.0}) {
        np::SolveOptions sopt;
        sopt.precision = target >= 1.0 ? np::Precision::Extended : np::Precision::Double;
        auto shape = np::solve_xi0(target, sopt);
        np::SpectrumOptions spec_opt;
        spec_opt.n_cap = 700;
        spec_opt.precision = sopt.precision;
        auto fam = families::make_spheroid_family(shape.xi0, true, spec_opt);
        auto fit = analysis::decay_fit(fam, 1000, 10000);
        const double rel = std::abs(fit.C_hat - target) / target;
        ok = ok && rel < 0.03;
        detail += "C=" + fmt(target) + ": xi0=" + fmt(shape.xi0) + " C_hat=" + fmt(fit.C_hat) +
                  " rel=" + fmt(rel) + "; ";
    }
    bool rejected = false;
    try {
        np::solve_xi0(0.4);
    } catch (const BracketNotFound&) {
        rejected = true;
    }
    ok = ok && rejected;
    report(8, "prescribed coefficients realized by solved shapes", ok,
           detail + "target 0.4 rejected: " + (rejected ? "yes" : "NO") +
               " (fits within 3%)");
}

// ------------------------------------------------------------------
// 9. The Farey difference family.

void criterion_farey() {
    using R = Rational;
    bool rows_ok = families::farey_row(1).lengths == std::vector<R>{R(1)} &&
                   families::farey_row(2).lengths == std::vector<R>{R(1, 2), R(1, 2)} &&
                   families::farey_row(3).lengths ==
                       std::vector<R>{R(1, 3), R(1, 6), R(1, 6), R(1, 3)} &&
                   families::farey_row(4).lengths ==
                       std::vector<R>{R(1, 4), R(1, 12), R(1, 6), R(1, 6), R(1, 12), R(1, 4)} &&
                   families::farey_row(5).lengths ==
                       std::vector<R>{R(1, 5), R(1, 20), R(1, 12), R(1, 15), R(1, 10), R(1, 10),
                                      R(1, 15), R(1, 12), R(1, 20), R(1, 5)};

    auto fam = families::make_farey_family();
    auto prefix = enumerate(fam, 15);
    const std::vector<R> expect15 = {R(1),    R(1, 2), R(1, 2), R(1, 3), R(1, 3),
                                     R(1, 4), R(1, 4), R(1, 5), R(1, 5), R(1, 6),
                                     R(1, 6), R(1, 6), R(1, 6), R(1, 6), R(1, 6)};
    bool prefix_ok = true;
    for (std::size_t i = 0; i < expect15.size(); ++i)
        if (prefix[i].value != expect15[i]) prefix_ok = false;

    auto fit = analysis::decay_fit(fam, 1000, 100000);
    const bool exponent_ok = fit.alpha_hat >= -0.38 && fit.alpha_hat <= -0.28;

    report(9, "Farey rows, merged prefix, fitted exponent", rows_ok && prefix_ok && exponent_ok,
           std::string("rows<=5: ") + (rows_ok ? "exact" : "MISMATCH") + ", Eq-prefix: " +
               (prefix_ok ? "exact" : "MISMATCH") + ", alpha_hat=" + fmt(fit.alpha_hat) +
               " (wanted [-0.38,-0.28]; the merged multiset decays with exponent -2/3)");
}

// ------------------------------------------------------------------
// 10. Property suites.

void criterion_properties() {
    int mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto fam = families::make_random_odd_family(seed, Rational(1 + seed % 5));
        const long n0 = 3 + static_cast<long>(seed % 6);
        std::vector<Rational> brute;
        for (long n = 0; n <= n0; ++n) {
            auto row = fam.row(n);
            brute.insert(brute.end(), row->lengths.begin(), row->lengths.end());
        }
        std::sort(brute.begin(), brute.end(), std::greater<>());
        const Rational cut = fam.ub(n0 + 1);
        DecreasingStream<Rational> stream(fam);
        for (std::size_t i = 0; i < brute.size() && brute[i] > cut; ++i)
            if (stream.next().value != brute[i]) ++mismatches;
    }

    double worst_wronskian = 0.0;
    for (double x : {1.05, 1.5, 2.0, 10.0})
        for (long m : {0L, 1L, 3L, 5L, 10L}) {
            auto t = specfun::normalized_legendre_table<double>(50, m, x);
            worst_wronskian = std::max(worst_wronskian, t.wronskian_residual());
        }

    double worst_fd = 0.0;
    const double h = 1e-6;
    for (double x : {1.5, 2.0, 10.0})
        for (long m : {0L, 1L, 4L}) {
            auto mid = specfun::legendre_table(12, m, x);
            auto up = specfun::legendre_table(12, m, x + h);
            auto dn = specfun::legendre_table(12, m, x - h);
            for (long n = m; n <= 12; ++n) {
                const auto& c = mid[n - m];
                const double fdp = (up[n - m].P - dn[n - m].P) / (2 * h);
                const double fdq = (up[n - m].Q - dn[n - m].Q) / (2 * h);
                worst_fd = std::max(worst_fd, std::abs(fdp - c.dP) / std::abs(c.dP));
                worst_fd = std::max(worst_fd, std::abs(fdq - c.dQ) / std::abs(c.dQ));
            }
        }

    const bool ok = mismatches == 0 && worst_wronskian < 1e-10 && worst_fd < 1e-5;
    report(10, "property suites (oracle merge, Wronskian, derivatives)", ok,
           "merge mismatches=" + std::to_string(mismatches) + "/20 cases, Wronskian=" +
               fmt(worst_wronskian) + " (< 1e-10), fd-residual=" + fmt(worst_fd) + " (< 1e-5)");
}

}  // namespace

int main() {
    criteria_equi();
    criterion_tau();
    criterion_gamma();
    criterion_trace();
    criterion_sphere_gates();
    criterion_weyl();
    criterion_solve();
    criterion_farey();
    criterion_properties();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
