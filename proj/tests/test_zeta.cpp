#include <catch2/catch_amalgamated.hpp>

#include "oddpart/specfun/zeta.hpp"

#include <cmath>

using namespace oddpart;
using namespace oddpart::specfun;

namespace {

/// Brute-force oracle: partial sum plus integral tail bracket. Returns
/// the bracket midpoint; width is below 1e-13 for the K used here.
double zeta_brute(double s) {
    const long K = 200000;
    long double sum = 0.0L;
    for (long k = K; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -(long double)s);
    const long double lo = std::pow((long double)(K + 1), 1.0L - s) / (s - 1.0L);
    const long double hi = std::pow((long double)K, 1.0L - s) / (s - 1.0L);
    return static_cast<double>(sum + (lo + hi) / 2.0L);
}

}  // namespace

TEST_CASE("zeta matches classical values") {
    CHECK(zeta(2.0) == Catch::Approx(kPi * kPi / 6).epsilon(1e-13));
    CHECK(zeta(4.0) == Catch::Approx(std::pow(kPi, 4) / 90).epsilon(1e-13));
    CHECK(zeta(3.0) == Catch::Approx(1.2020569031595942854).epsilon(1e-13));
}

TEST_CASE("zeta agrees with the partial-sum oracle") {
    for (double s : {1.5, 1.75, 2.5, 3.5, 5.0, 8.0, 12.0, 20.0, 35.0, 50.0}) {
        INFO("s=" << s);
        CHECK(zeta(s) == Catch::Approx(zeta_brute(s)).epsilon(1e-11));
    }
}

TEST_CASE("zeta near the pole exposes Euler's constant") {
    const double s = 1.001;
    CHECK(zeta(s) - 1.0 / (s - 1.0) == Catch::Approx(kEulerGamma).margin(1e-3));
    CHECK(zeta_minus_pole(s) == Catch::Approx(zeta(s) - 1000.0).margin(1e-9));
    // the stieltjes branch joins smoothly
    CHECK(zeta_minus_pole(1.0 + 1e-9) == Catch::Approx(kEulerGamma).margin(1e-7));
}

TEST_CASE("zeta is monotone decreasing toward 1") {
    double prev = zeta(1.1);
    for (double s : {1.5, 2.0, 3.0, 5.0, 10.0, 20.0, 40.0}) {
        const double z = zeta(s);
        CHECK(z < prev);
        prev = z;
    }
    CHECK(zeta(45.0) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("zeta rejects s <= 1") {
    CHECK_THROWS_AS(zeta(1.0), ArgumentOutOfDomain);
    CHECK_THROWS_AS(zeta(0.5), ArgumentOutOfDomain);
}

TEST_CASE("tau_zeta_bound values") {
    CHECK(tau_zeta_bound(3.0) == Catch::Approx(kPi * kPi / 8).epsilon(1e-13));
    CHECK(tau_zeta_bound(4.0) == Catch::Approx(0.875 * zeta(3.0)).epsilon(1e-13));
    CHECK(tau_zeta_bound(40.0) == Catch::Approx(1.0).margin(1e-11));
    CHECK_THROWS_AS(tau_zeta_bound(2.0), ArgumentOutOfDomain);
}

TEST_CASE("odd_power_tail matches direct summation") {
    for (double q : {2.0, 3.0, 1.3}) {
        for (long R : {0L, 5L, 100L}) {
            long double direct = 0.0L;
            for (long N = R + 400000; N >= R; --N)
                direct += std::pow((long double)(2 * N + 1), -(long double)q);
            // crude tail of the direct sum itself
            const long double tail =
                std::pow((long double)(2 * (R + 400000) + 3), 1.0L - q) / (2 * (q - 1.0L));
            INFO("q=" << q << " R=" << R);
            CHECK(odd_power_tail(q, R) ==
                  Catch::Approx(static_cast<double>(direct + tail)).epsilon(1e-6));
        }
    }
}

TEST_CASE("hurwitz zeta reduces to zeta at a=1") {
    CHECK(hurwitz_zeta(2.5, 1.0) == Catch::Approx(zeta(2.5)).epsilon(1e-14));
}
