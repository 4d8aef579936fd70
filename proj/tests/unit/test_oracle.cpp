#include "gpvar/errors.hpp"
#include "gpvar/local_model.hpp"
#include "gpvar/nonlocal_model.hpp"
#include "gpvar/oracle.hpp"
#include "property.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gpvar;
using gpvar::test::rel_diff;

TEST_CASE("Gauss-Kronrod rule integrates polynomials exactly") {
    // K15 is exact to degree 22, G7 to degree 13.
    for (int degree = 0; degree <= 13; ++degree) {
        auto f = [degree](double x) { return std::pow(x, degree); };
        const oracle::detail::Segment s = oracle::detail::gauss_kronrod_15(f, 0.0, 1.0);
        CAPTURE(degree);
        CHECK(rel_diff(s.value, 1.0 / (degree + 1)) < 1e-15);
        CHECK(s.error < 1e-15);
    }
    for (int degree = 14; degree <= 22; ++degree) {
        auto f = [degree](double x) { return std::pow(x, degree); };
        CAPTURE(degree);
        CHECK(rel_diff(oracle::detail::gauss_kronrod_15(f, 0.0, 1.0).value, 1.0 / (degree + 1)) < 1e-14);
    }
}

TEST_CASE("adaptive integration") {
    const auto r = oracle::detail::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13, 0.0, 1000);
    CHECK(rel_diff(r.value, 2.0 / 3.0) < 1e-13);
    CHECK_THROWS_AS(oracle::detail::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-15, 0.0, 5),
                    ConvergenceError);
}

TEST_CASE("normalization") {
    for (double sigma : {0.1, 0.3, 1.0, 3.7, 10.0}) {
        CAPTURE(sigma);
        CHECK(std::abs(oracle::quad_norm(sigma) - 1.0) < 1e-12);
    }
}

TEST_CASE("noninteracting quadrature") {
    const EnergyBreakdown e = oracle::quad_energy(Contact{0.0}, 1.0, 1.0);
    CHECK(std::abs(e.kinetic - 0.75) < 1e-13);
    CHECK(std::abs(e.trap - 0.75) < 1e-13);
    CHECK(e.interaction == 0.0);
}

TEST_CASE("contact interaction quadrature") {
    for (double sigma : {0.3, 1.0, 2.5}) {
        const double q = oracle::quad_energy(Contact{3.0}, 2.0, sigma).interaction;
        CHECK(rel_diff(q, 6.0 / (2.0 * two_pi_three_halves * std::pow(sigma, 3))) < 1e-9);
    }
}

TEST_CASE("quadrature of the energy at bN = 1, sigma = 0.5") {
    CHECK(rel_diff(oracle::quad_energy(Contact{1.0}, 1.0, 0.5).total, 3.4414745437369638791) < 1e-12);
}

TEST_CASE("screened quadrature against 40-digit references") {
    CHECK(rel_diff(oracle::quad_screened_pair(1.0, 1.0, 1.0), -0.27472797707261861252) < 1e-10);
    CHECK(rel_diff(oracle::quad_screened_pair(1.0, 2.0, 0.5), -0.54945595414523722503) < 1e-10);
    CHECK(rel_diff(oracle::quad_screened_pair(1.0, 0.3, 2.0), -0.20193792372502564113) < 1e-10);
}

TEST_CASE("weak screening approaches the Coulomb kernel") {
    const double n = 3.0;
    const double e = oracle::quad_energy(Screened{1.0, 1e-6}, n, 1.0).interaction;
    const double coulomb = oracle::quad_energy(Screened{1.0, 0.0}, n, 1.0).interaction;
    CHECK(rel_diff(coulomb, -0.5 * n * std::sqrt(2.0 / std::numbers::pi)) < 1e-10);
    CHECK(rel_diff(e, coulomb) < 2e-6);
}

TEST_CASE("cutoff adequacy") {
    // Doubling the outer radius must not move the screened result.
    oracle::QuadratureSpec wide;
    wide.outer_radius = 24.0;
    for (double gamma : {0.01, 1.0, 10.0}) {
        const double base = oracle::quad_screened_pair(1.0, gamma, 1.0);
        CAPTURE(gamma);
        CHECK(rel_diff(oracle::quad_screened_pair(1.0, gamma, 1.0, wide), base) < 1e-13);
    }
}

TEST_CASE("finite-difference derivatives") {
    CHECK(std::abs(oracle::fd_derivative([](double x) { return x * x; }, 3.0, 1).value - 6.0) < 1e-12);
    CHECK(std::abs(oracle::fd_derivative([](double x) { return x * x * x; }, 1.0, 2).value - 6.0) < 1e-9);
    const LocalModel m(2.0, 1.5);
    const auto d = oracle::fd_derivative([&](double s) { return energy(m, GaussianAnsatz(s)).total; }, 0.9, 1);
    CHECK(rel_diff(d.value, denergy_dsigma(m, GaussianAnsatz(0.9))) < 1e-8);
    CHECK_THROWS_AS(oracle::fd_derivative([](double) { return NAN; }, 1.0, 1), DomainError);
    CHECK_THROWS_AS(oracle::fd_derivative([](double x) { return x; }, 1.0, 3), DomainError);
}

TEST_CASE("Monte Carlo pair integral") {
    const auto mc = oracle::mc_pair_integral(Screened{1.0, 1.0}, 1.0, 1000000);
    const double q = oracle::quad_screened_pair(1.0, 1.0, 1.0);
    CHECK(mc.std_error > 0.0);
    CHECK(std::abs(mc.value - q) < 3.0 * mc.std_error);

    const auto again = oracle::mc_pair_integral(Screened{1.0, 1.0}, 1.0, 1000000);
    CHECK(again.value == mc.value);

    CHECK_THROWS_AS(oracle::mc_pair_integral(Contact{1.0}, 1.0, 100000), DomainError);
    CHECK_THROWS_AS(oracle::mc_pair_integral(Composite{{1.0}, {1.0, 1.0}}, 1.0, 100000), DomainError);
    CHECK_THROWS_AS(oracle::mc_pair_integral(Screened{1.0, 1.0}, 1.0, 10), DomainError);
}
