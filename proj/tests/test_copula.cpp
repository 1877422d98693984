#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "extfgm/copula.hpp"
#include "extfgm/validity.hpp"
#include "test_support.hpp"

using namespace extfgm;

TEST_CASE("phi vanishes at both endpoints and matches hand values", "[copula]") {
    CHECK(phi(0.0, 1.3) == 0.0);
    CHECK(std::abs(phi(1.0, 0.7)) <= 1e-15);
    CHECK(phi(0.5, 0.0) == 0.25);

    CHECK_THROWS_AS(phi(-0.1, 1.0), DomainViolation);
    CHECK_THROWS_AS(phi(1.1, 1.0), DomainViolation);
    CHECK_THROWS_AS(phi(0.5, 2.5), DomainViolation);
    CHECK_THROWS_AS(phi(0.5, -0.01), DomainViolation);
}

TEST_CASE("phi_prime matches the quadratic 1 - 2(1+b)u + 3bu^2", "[copula]") {
    CHECK(phi_prime(0.0, 1.5) == 1.0);
    // at u = 1 the slope is b - 1
    CHECK(phi_prime(1.0, 0.3) == Catch::Approx(-0.7).margin(1e-15));
    // at the interior stationary point of the b = 1 member
    CHECK(phi_prime(2.0 / 3.0, 1.0) == Catch::Approx(-1.0 / 3.0).margin(1e-15));
    CHECK_THROWS_AS(phi_prime(2.0, 1.0), DomainViolation);
}

TEST_CASE("parameter and point invariants are enforced at construction", "[copula]") {
    CHECK_THROWS_AS(CopulaParams(1.0, -0.1), DomainViolation);
    CHECK_THROWS_AS(CopulaParams(1.0, 2.0001), DomainViolation);
    CHECK_THROWS_AS(CopulaParams(std::nan(""), 1.0), DomainViolation);
    CHECK_THROWS_AS(CopulaParams(INFINITY, 1.0), DomainViolation);
    CHECK_NOTHROW(CopulaParams(1e9, 2.0)); // a is unconstrained, only finite

    CHECK_THROWS_AS(UnitPoint(1.2, 0.5), DomainViolation);
    CHECK_THROWS_AS(UnitPoint(0.5, -0.2), DomainViolation);

    CHECK_THROWS_AS(PhiCubic(1.0, -2.0, 1.1), DomainViolation); // Phi(1) != 0
    testsupport::Uniform random(11);
    for (int i = 0; i < 50; ++i) {
        const PhiCubic shape(random(0.0, 2.0));
        CHECK(std::abs(shape.c1 + shape.c2 + shape.c3) <= 1e-15);
        CHECK(shape.value(0.0) == 0.0);
        CHECK(std::abs(shape.value(1.0)) <= 1e-15);
    }
}

TEST_CASE("cdf spot values", "[copula]") {
    CHECK(cdf(UnitPoint(0.4, 1.0), CopulaParams(1.7, 1.3)) ==
          Catch::Approx(0.4).margin(1e-14));
    CHECK(cdf(UnitPoint(0.5, 0.5), CopulaParams(0.0, 1.2)) == 0.25);
    CHECK(cdf(UnitPoint(0.5, 0.5), CopulaParams(1.0, 0.0)) == 0.3125);
}

TEST_CASE("margins are grounded and uniform for any finite a", "[copula]") {
    testsupport::Uniform random(23);
    for (int trial = 0; trial < 40; ++trial) {
        const CopulaParams params(random(-6.0, 6.0), random(0.0, 2.0));
        for (int k = 0; k <= 20; ++k) {
            const double x = k / 20.0;
            CHECK(std::abs(cdf(UnitPoint(x, 0.0), params)) <= 1e-14);
            CHECK(std::abs(cdf(UnitPoint(0.0, x), params)) <= 1e-14);
            CHECK(std::abs(cdf(UnitPoint(x, 1.0), params) - x) <= 1e-14);
            CHECK(std::abs(cdf(UnitPoint(1.0, x), params) - x) <= 1e-14);
        }
    }
}

TEST_CASE("cdf is symmetric in (u, v)", "[copula]") {
    testsupport::Uniform random(29);
    for (int trial = 0; trial < 200; ++trial) {
        const CopulaParams params(random(-3.0, 4.0), random(0.0, 2.0));
        const double u = random(0.0, 1.0), v = random(0.0, 1.0);
        CHECK(cdf(UnitPoint(u, v), params) == cdf(UnitPoint(v, u), params));
    }
}

TEST_CASE("expanded evaluation equals the factored product form", "[copula]") {
    testsupport::Uniform random(31);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = random(-3.0, 4.0);
        const double b = random(0.0, 2.0);
        const CopulaParams params(a, b);
        for (int i = 0; i <= 100; ++i) {
            for (int j = 0; j <= 100; ++j) {
                const double u = i / 100.0, v = j / 100.0;
                const double expanded = cdf(UnitPoint(u, v), params);
                const double factored = testsupport::factored_cdf(u, v, a, b);
                REQUIRE(std::abs(expanded - factored) <= 1e-14);
            }
        }
    }
}

TEST_CASE("b = 0 reduces to the classical FGM copula", "[copula]") {
    for (const double a : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const CopulaParams params(a, 0.0);
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) {
                const double u = i / 100.0, v = j / 100.0;
                REQUIRE(std::abs(cdf(UnitPoint(u, v), params) -
                                 fgm_reference_cdf(UnitPoint(u, v), a)) <= 1e-15);
            }
    }
    CHECK(fgm_reference_cdf(UnitPoint(0.5, 0.5), 1.0) == 0.3125);
    CHECK(fgm_reference_cdf(UnitPoint(0.3, 0.8), 0.0) == 0.3 * 0.8);
    CHECK(fgm_reference_cdf(UnitPoint(1.0, 0.7), -1.0) == 0.7);
    CHECK_THROWS_AS(fgm_reference_cdf(UnitPoint(0.5, 0.5), 1.5), DomainViolation);
}

TEST_CASE("b = 1 reduces to uv[1 + a(1-u)^2(1-v)^2]", "[copula]") {
    for (const double a : {-1.0, 1.5, 3.0}) {
        const CopulaParams params(a, 1.0);
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) {
                const double u = i / 100.0, v = j / 100.0;
                const double reduced =
                    u * v * (1.0 + a * (1.0 - u) * (1.0 - u) * (1.0 - v) * (1.0 - v));
                REQUIRE(std::abs(cdf(UnitPoint(u, v), params) - reduced) <= 1e-14);
            }
    }
}

TEST_CASE("admissible parameters respect the Frechet-Hoeffding bounds", "[copula]") {
    testsupport::Uniform random(37);
    for (int trial = 0; trial < 25; ++trial) {
        const double b = random(0.0, 2.0);
        const AdmissibleRange range = corrected_range(b);
        const CopulaParams params(random(range.lower, range.upper), b);
        for (int i = 0; i <= 50; ++i)
            for (int j = 0; j <= 50; ++j) {
                const double u = i / 50.0, v = j / 50.0;
                const double c = cdf(UnitPoint(u, v), params);
                REQUIRE(c >= std::max(u + v - 1.0, 0.0) - 1e-12);
                REQUIRE(c <= std::min(u, v) + 1e-12);
            }
    }
}

TEST_CASE("density spot values and independence", "[copula]") {
    testsupport::Uniform random(41);
    for (int i = 0; i < 20; ++i) {
        const CopulaParams independent(0.0, random(0.0, 2.0));
        CHECK(density(UnitPoint(random(0, 1), random(0, 1)), independent) == 1.0);
    }
    CHECK(density(UnitPoint(0.0, 0.0), CopulaParams(2.0, 0.5)) == 3.0);
    // at b = 1/2 the slope minimum sits exactly at u = (1+b)/(3b) = 1
    CHECK(density(UnitPoint(1.0, 0.0), CopulaParams(2.0, 0.5)) == 0.0);
    // negative density is meaningful output for inadmissible parameters
    CHECK(density(UnitPoint(1.0, 0.0), CopulaParams(3.0, 0.5)) < 0.0);
}

TEST_CASE("conditional CDF endpoints and independence", "[copula]") {
    testsupport::Uniform random(43);
    for (int i = 0; i < 30; ++i) {
        const CopulaParams params(random(-1.0, 3.0), random(0.0, 2.0));
        const double u = random(0.0, 1.0);
        CHECK(conditional_v_given_u(u, 0.0, params) == 0.0);
        CHECK(std::abs(conditional_v_given_u(u, 1.0, params) - 1.0) <= 1e-12);
    }
    CHECK(conditional_v_given_u(0.3, 0.5, CopulaParams(0.0, 1.0)) == 0.5);
}

TEST_CASE("conditional CDF is nondecreasing in v for admissible parameters", "[copula]") {
    testsupport::Uniform random(47);
    for (int trial = 0; trial < 25; ++trial) {
        const double b = random(0.0, 2.0);
        const AdmissibleRange range = corrected_range(b);
        const CopulaParams params(random(range.lower, range.upper), b);
        const double u = random(0.0, 1.0);
        double prev = conditional_v_given_u(u, 0.0, params);
        for (int k = 1; k <= 200; ++k) {
            const double next = conditional_v_given_u(u, k / 200.0, params);
            REQUIRE(next - prev >= -1e-12);
            prev = next;
        }
    }
}

TEST_CASE("closed-form rho and tau", "[copula]") {
    CHECK(rho_closed_form(CopulaParams(0.0, 1.7)) == 0.0);
    CHECK(rho_closed_form(CopulaParams(-1.0, 0.0)) ==
          Catch::Approx(-1.0 / 3.0).margin(1e-15));
    CHECK(rho_closed_form(CopulaParams(2.0, 0.5)) == 0.375);

    CHECK(tau_closed_form(CopulaParams(0.0, 0.2)) == 0.0);
    CHECK(tau_closed_form(CopulaParams(-1.0, 0.0)) ==
          Catch::Approx(-2.0 / 9.0).margin(1e-15));
    CHECK(tau_closed_form(CopulaParams(2.0, 0.5)) == 0.25);
}

TEST_CASE("tau is exactly two thirds of rho", "[copula]") {
    testsupport::Uniform random(53);
    for (int trial = 0; trial < 300; ++trial) {
        const CopulaParams params(random(-5.0, 5.0), random(0.0, 2.0));
        CHECK(tau_closed_form(params) == (2.0 / 3.0) * rho_closed_form(params));
        const DependenceMeasures m = closed_form_measures(params);
        CHECK(m.rho == rho_closed_form(params));
        CHECK(m.tau == tau_closed_form(params));
    }
}
