#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
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
#include "oddpart/np/weyl.hpp"
#include "oddpart/specfun/legendre.hpp"
#include "oddpart/specfun/zeta.hpp"

namespace oddpart {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/**
 * The runtime invariant battery behind `oddpart verify`: one quick,
 * self-contained check per module-level invariant. Returns one result
 * per check; everything runs even after a failure.
 */
inline std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> results;
    const auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(r);
    };
    const auto expect = [](bool ok, const std::string& msg) {
        if (!ok) throw std::runtime_error(msg);
    };

    check("enumerate.monotone", [&] {
        const auto probe = [&](const ExactFamily& fam, std::uint64_t count) {
            auto out = enumerate(fam, count);
            for (std::size_t i = 1; i < out.size(); ++i)
                expect(out[i - 1].value >= out[i].value,
                       fam.name() + " not monotone at j=" + std::to_string(i + 1));
        };
        probe(families::make_equi_family(), 2000);
        probe(families::make_farey_family(), 2000);
        probe(families::make_random_odd_family(11, Rational(5)), 1500);
        auto sph = families::make_spheroid_family(1.5, true, {});
        auto out = enumerate(sph, 400);
        for (std::size_t i = 1; i < out.size(); ++i)
            expect(out[i - 1].value >= out[i].value, "spheroid2 not monotone");
        return "equi, farey, random, spheroid2 prefixes non-increasing";
    });

    check("enumerate.equi_closed_form", [&] {
        auto fam = families::make_equi_family();
        DecreasingStream<Rational> stream(fam);
        for (std::uint64_t j = 1; j <= 10000; ++j)
            expect(stream.next().value == families::equi_nth_value(j),
                   "mismatch at j=" + std::to_string(j));
        return "a_j = 1/(2 ceil(sqrt j) - 1) for j <= 1e4";
    });

    check("enumerate.brute_force_oracle", [&] {
        for (std::uint64_t seed : {2u, 5u, 13u}) {
            auto fam = families::make_random_odd_family(seed, Rational(2));
            std::vector<Rational> brute;
            for (long n = 0; n <= 6; ++n) {
                auto row = fam.row(n);
                brute.insert(brute.end(), row->lengths.begin(), row->lengths.end());
            }
            std::sort(brute.begin(), brute.end(), std::greater<>());
            const Rational cut = fam.ub(7);
            DecreasingStream<Rational> stream(fam);
            for (std::size_t i = 0; i < brute.size() && brute[i] > cut; ++i)
                expect(stream.next().value == brute[i], "oracle mismatch");
        }
        return "merged order equals brute-force sort on truncations";
    });

    check("rows.holder_margin", [&] {
        for (std::uint64_t seed : {3u, 8u}) {
            auto fam = families::make_random_odd_family(seed, Rational(1));
            for (long n : {1L, 3L, 8L, 20L})
                for (double p : {1.5, 2.0, 3.0, 5.0})
                    expect(row_holder_margin(*fam.row(n), p) >= 0.0, "negative margin");
        }
        return "row p-power sums dominate the equi bound";
    });

    check("specfun.zeta", [&] {
        expect(std::abs(specfun::zeta(2.0) - specfun::kPi * specfun::kPi / 6) < 1e-12, "zeta(2)");
        expect(std::abs(specfun::zeta(3.0) - 1.2020569031595943) < 1e-12, "zeta(3)");
        expect(std::abs(specfun::zeta(1.001) - 1000.0 - specfun::kEulerGamma) < 1e-3,
               "gamma near the pole");
        expect(std::abs(specfun::tau_zeta_bound(3.0) - specfun::kPi * specfun::kPi / 8) < 1e-12,
               "tau bound at p=3");
        return "classical values and the pole expansion";
    });

    check("specfun.legendre_wronskian", [&] {
        for (double x : {1.05, 1.5, 2.0, 10.0})
            for (long m : {0L, 3L, 10L}) {
                auto t = specfun::normalized_legendre_table<double>(50, m, x);
                const double resid = t.wronskian_residual();
                expect(resid < 1e-10, "residual " + std::to_string(resid));
            }
        return "residual < 1e-10 over the grid";
    });

    check("np.trace_identity", [&] {
        for (double xi0 : {1.05, 1.5, 3.0, 10.0}) {
            np::SpheroidSpectrum spec(xi0, {});
            for (long n = 0; n <= 30; ++n) {
                auto block = spec.degree_block(n);
                const double sum = std::accumulate(block.begin(), block.end(), 0.0);
                expect(std::abs(sum - 0.5) < 1e-10,
                       "degree " + std::to_string(n) + " at xi0=" + std::to_string(xi0));
            }
        }
        return "sum_m lambda_{n,m} = 1/2 within 1e-10, n <= 30";
    });

    check("np.sphere_gates", [&] {
        for (long n = 0; n <= 5; ++n)
            for (long m = 0; m <= n; ++m)
                expect(std::abs(np::np_eigenvalue(np::SpheroidShape::of(1000.0), n, m) -
                                0.5 / (2 * n + 1)) < 1e-4,
                       "sphere limit at n=" + std::to_string(n));
        auto report = np::weyl_coefficient(np::SpheroidShape::of(1e9));
        expect(std::abs(report.coeff - 0.25) < 1e-10, "weyl sphere coefficient");
        return "lambda -> 1/(2(2n+1)) and C~ -> 1/4";
    });

    check("np.willmore", [&] {
        const double w12 = np::willmore_energy(np::SpheroidShape::of(1.2));
        const double w2 = np::willmore_energy(np::SpheroidShape::of(2.0));
        const double w10 = np::willmore_energy(np::SpheroidShape::of(10.0));
        expect(w12 > w2 && w2 > w10 && w10 > 4 * specfun::kPi, "monotone toward 4pi");
        np::WillmoreOptions scaled;
        scaled.scale = 7.3;
        expect(std::abs(np::willmore_energy(np::SpheroidShape::of(1.4), scaled) -
                        np::willmore_energy(np::SpheroidShape::of(1.4))) <
                   1e-12 * w12,
               "scale dependence detected");
        return "monotone in xi0, scale-free, above 4pi";
    });

    check("analysis.tau_bracket", [&] {
        auto fam = families::make_equi_family();
        auto br = analysis::tau_bracket(fam, 3.0, 2000);
        expect(br.lower <= specfun::kPi * specfun::kPi / 8 && br.upper >= specfun::kPi * specfun::kPi / 8,
               "equi bracket misses pi^2/8");
        expect(br.upper - br.lower < 1e-7, "bracket too wide");
        for (std::uint64_t seed : {4u, 9u}) {
            auto rnd = families::make_random_odd_family(seed, Rational(2));
            for (double p : {2.5, 3.0, 4.0}) {
                auto b = analysis::tau_bracket(rnd, p, 200);
                expect(b.lower >= b.bound_ref - 1e-12, "zeta bound violated");
            }
        }
        return "enclosure and the zeta bound hold";
    });

    check("analysis.gamma_probe", [&] {
        std::vector<double> ps;
        for (int k = 3; k <= 10; ++k) ps.push_back(2.0 + std::exp2(-k));
        auto probe = analysis::gamma_limit_probe(ps);
        const double err = std::abs(probe.extrapolated - analysis::gamma_limit_target());
        expect(err < 1e-6, "extrapolation error " + std::to_string(err));
        return "extrapolates to (log2 + gamma)/2 within 1e-6";
    });

    check("analysis.liminf_window", [&] {
        auto fam = families::make_equi_family();
        auto res = analysis::liminf_probe(fam, {{10000, 40000}});
        expect(res[0].inf_c >= 0.45, "equi window fell under 0.45");
        auto rnd = families::make_random_odd_family(3, Rational(10));
        auto res2 = analysis::liminf_probe(rnd, {{2000, 8000}});
        expect(res2[0].inf_c >= 0.45, "random window fell under 0.45");
        return "sqrt(j) a_j floors hold on the probe windows";
    });

    check("families.farey_rows", [&] {
        using R = Rational;
        expect(families::farey_row(3).lengths ==
                   std::vector<R>{R(1, 3), R(1, 6), R(1, 6), R(1, 3)},
               "order 3 row");
        auto out = enumerate(families::make_farey_family(), 15);
        const std::vector<R> expect15 = {R(1),     R(1, 2), R(1, 2), R(1, 3), R(1, 3),
                                         R(1, 4),  R(1, 4), R(1, 5), R(1, 5), R(1, 6),
                                         R(1, 6),  R(1, 6), R(1, 6), R(1, 6), R(1, 6)};
        for (std::size_t i = 0; i < expect15.size(); ++i)
            expect(out[i].value == expect15[i], "merged prefix");
        return "diagram rows and the merged prefix";
    });

    return results;
}

}  // namespace oddpart
