#include <catch2/catch_amalgamated.hpp>

#include "oddpart/decreasing_stream.hpp"
#include "oddpart/families/spheroid.hpp"
#include "oddpart/np/spheroid.hpp"

#include <cmath>
#include <numeric>

using namespace oddpart;
using namespace oddpart::np;

TEST_CASE("the constant mode carries eigenvalue exactly 1/2") {
    for (double xi0 : {1.05, 1.5, 3.0, 10.0})
        CHECK(np_eigenvalue(SpheroidShape::of(xi0), 0, 0) == 0.5);
}

TEST_CASE("trace identity: each degree sums to 1/2") {
    for (double xi0 : {1.05, 1.5, 3.0, 10.0}) {
        SpheroidSpectrum spec(xi0, {});
        for (long n = 0; n <= 30; ++n) {
            auto block = spec.degree_block(n);
            const double sum = std::accumulate(block.begin(), block.end(), 0.0);
            INFO("xi0=" << xi0 << " n=" << n);
            CHECK(std::abs(sum - 0.5) < 1e-10);
        }
    }
}

TEST_CASE("symmetry in m is exact") {
    SpheroidSpectrum spec(1.3, {});
    for (long n : {1L, 4L, 9L})
        for (long m = 1; m <= n; ++m) CHECK(spec.eigenvalue(n, m) == spec.eigenvalue(n, -m));
}

TEST_CASE("sphere limit: lambda -> 1/(2(2n+1))") {
    CHECK(np_eigenvalue(SpheroidShape::of(10.0), 1, 0) == Catch::Approx(1.0 / 6).margin(1e-2));
    for (long n = 0; n <= 5; ++n)
        for (long m = 0; m <= n; ++m) {
            const double lam = np_eigenvalue(SpheroidShape::of(1000.0), n, m);
            INFO("n=" << n << " m=" << m);
            CHECK(std::abs(lam - 0.5 / (2 * n + 1)) < 1e-4);
        }
    // tagged sphere shapes short-circuit to the classical values
    CHECK(np_eigenvalue(SpheroidShape::sphere(), 2, 1) == 0.1);
}

TEST_CASE("approach to the sphere is quadratic in 1/xi0") {
    for (long n = 1; n <= 5; ++n)
        for (double xi0 : {10.0, 20.0, 40.0}) {
            const double lam = np_eigenvalue(SpheroidShape::of(xi0), n, 1);
            const double gap = std::abs(lam - 0.5 / (2 * n + 1));
            INFO("n=" << n << " xi0=" << xi0);
            CHECK(gap * xi0 * xi0 < 1.0);
        }
}

TEST_CASE("spectral rows: sorted, positive, exact cardinality") {
    auto row = families::spheroid_row(1.5, 2, false);
    REQUIRE(row.lengths.size() == 5);
    CHECK(row.target_sum == 0.5);
    for (std::size_t i = 1; i < row.lengths.size(); ++i)
        CHECK(row.lengths[i - 1] >= row.lengths[i]);
    for (double v : row.lengths) CHECK(v > 0);
    const double sum = std::accumulate(row.lengths.begin(), row.lengths.end(), 0.0);
    CHECK(std::abs(sum - 0.5) < 1e-10);

    auto n0 = families::spheroid_row(1.5, 0, false);
    REQUIRE(n0.lengths == std::vector<double>{0.5});
}

TEST_CASE("doubling is an exact factor of two") {
    auto raw = families::spheroid_row(1.7, 3, false);
    auto dbl = families::spheroid_row(1.7, 3, true);
    REQUIRE(raw.lengths.size() == dbl.lengths.size());
    for (std::size_t i = 0; i < raw.lengths.size(); ++i)
        CHECK(dbl.lengths[i] == 2.0 * raw.lengths[i]);
    CHECK(dbl.target_sum == 1.0);
}

TEST_CASE("near-degenerate regime keeps the trace identity") {
    auto row = families::spheroid_row(1.05, 10, false);
    REQUIRE(row.lengths.size() == 21);
    const double sum = std::accumulate(row.lengths.begin(), row.lengths.end(), 0.0);
    CHECK(std::abs(sum - 0.5) < 1e-8);
    for (double v : row.lengths) CHECK(v > 0);
    // extended mode reproduces it at least as well
    auto rowx = families::spheroid_row(1.05, 10, false,
                                       {.n_cap = 16, .precision = Precision::Extended});
    const double sumx = std::accumulate(rowx.lengths.begin(), rowx.lengths.end(), 0.0);
    CHECK(std::abs(sumx - 0.5) < 1e-8);
}

TEST_CASE("row maxima decrease with the degree") {
    SpheroidSpectrum spec(1.2, {});
    double prev = spec.row_max(0);
    for (long n = 1; n <= 40; ++n) {
        const double cur = spec.row_max(n);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("the doubled spheroid stream enumerates in decreasing order") {
    auto fam = families::make_spheroid_family(1.5, true, {});
    auto out = enumerate(fam, 500);
    CHECK(out[0].value == 1.0);
    for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].value >= out[i].value);
}

TEST_CASE("degrees beyond the cap are refused") {
    SpheroidSpectrum spec(1.5, {.n_cap = 12, .precision = Precision::Double});
    CHECK_NOTHROW(spec.degree_block(12));
    CHECK_THROWS_AS(spec.degree_block(13), RowLimitExceeded);
}
