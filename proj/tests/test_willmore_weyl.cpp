#include <catch2/catch_amalgamated.hpp>

#include "oddpart/np/solve_xi0.hpp"
#include "oddpart/np/weyl.hpp"
#include "oddpart/np/willmore.hpp"

#include <cmath>

using namespace oddpart;
using namespace oddpart::np;

namespace {

/// Closed-form Willmore energy of the prolate spheroid in terms of the
/// eccentricity e = 1/xi0 (independent derivation, used as the test
/// oracle for the quadrature path):
///   W(e) = pi (3 - 2 e^2 / 3 + asin(e) / (e sqrt(1 - e^2))).
double willmore_closed_form(double xi0) {
    const double e = 1.0 / xi0;
    return specfun::kPi * (3.0 - 2.0 * e * e / 3.0 + std::asin(e) / (e * std::sqrt(1.0 - e * e)));
}

}  // namespace

TEST_CASE("willmore quadrature agrees with the closed form") {
    for (double xi0 : {1.05, 1.2, 1.5, 2.0, 3.0, 10.0}) {
        INFO("xi0=" << xi0);
        CHECK(willmore_energy(SpheroidShape::of(xi0)) ==
              Catch::Approx(willmore_closed_form(xi0)).epsilon(1e-10));
    }
}

TEST_CASE("willmore sphere limit is 4 pi") {
    CHECK(willmore_energy(SpheroidShape::sphere()) == 4.0 * specfun::kPi);
    CHECK(willmore_energy(SpheroidShape::of(1e9)) ==
          Catch::Approx(4.0 * specfun::kPi).epsilon(1e-10));
}

TEST_CASE("willmore decreases toward the sphere") {
    const double w12 = willmore_energy(SpheroidShape::of(1.2));
    const double w2 = willmore_energy(SpheroidShape::of(2.0));
    const double w10 = willmore_energy(SpheroidShape::of(10.0));
    CHECK(w12 > w2);
    CHECK(w2 > w10);
    CHECK(w10 > 4.0 * specfun::kPi);
}

TEST_CASE("willmore is scale free") {
    WillmoreOptions big;
    big.scale = 7.3;
    const double w1 = willmore_energy(SpheroidShape::of(1.4));
    const double w2 = willmore_energy(SpheroidShape::of(1.4), big);
    CHECK(w1 == Catch::Approx(w2).epsilon(1e-12));
}

TEST_CASE("weyl coefficient gates on the sphere value 1/4") {
    auto sphere = weyl_coefficient(SpheroidShape::sphere());
    CHECK(sphere.coeff == Catch::Approx(0.25).margin(1e-12));
    CHECK(sphere.coeff_doubled == Catch::Approx(0.5).margin(1e-12));
    auto nearly = weyl_coefficient(SpheroidShape::of(1e9));
    CHECK(nearly.coeff == Catch::Approx(0.25).margin(1e-10));
}

TEST_CASE("weyl coefficient exceeds 1/4 off the sphere") {
    for (double xi0 : {1.05, 1.5, 3.0, 100.0})
        CHECK(weyl_coefficient(SpheroidShape::of(xi0)).coeff > 0.25);
}

TEST_CASE("empirical fit of the doubled stream tracks the formula") {
    WeylOptions opt;
    opt.with_fit = true;
    opt.fit_j_lo = 500;
    opt.fit_j_hi = 5000;
    auto report = weyl_coefficient(SpheroidShape::of(1.5), opt);
    REQUIRE(report.fit.has_value());
    CHECK(report.fit->alpha_hat == Catch::Approx(-0.5).margin(0.02));
    CHECK(report.fit->C_hat ==
          Catch::Approx(report.coeff_doubled).epsilon(0.03));
}

TEST_CASE("solve_xi0 equality case returns the tagged sphere") {
    auto shape = solve_xi0(0.5);
    CHECK(shape.sphere_limit);
}

TEST_CASE("solve_xi0 below the minimum coefficient has no bracket") {
    CHECK_THROWS_AS(solve_xi0(0.4), BracketNotFound);
    CHECK_THROWS_AS(solve_xi0(0.5 + 1e-9), BracketNotFound);
}

TEST_CASE("solve_xi0 round trip") {
    for (double target : {0.55, 0.6, 0.8}) {
        auto shape = solve_xi0(target);
        const double back = weyl_coefficient(shape).coeff_doubled;
        INFO("target=" << target << " xi0=" << shape.xi0);
        CHECK(back == Catch::Approx(target).margin(1e-8));
    }
}

TEST_CASE("targets beyond the double-precision wall need the extended mode") {
    CHECK_THROWS_AS(solve_xi0(1.0), BracketNotFound);
    SolveOptions ext;
    ext.precision = Precision::Extended;
    auto shape = solve_xi0(1.0, ext);
    CHECK(shape.xi0 < 1.02);
    CHECK(weyl_coefficient(shape).coeff_doubled == Catch::Approx(1.0).margin(1e-8));
}
