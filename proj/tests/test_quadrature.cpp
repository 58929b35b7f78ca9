#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cam/errors.hpp"
#include "cam/quadrature.hpp"

TEST_CASE("monomials on [0,1] are exact to tolerance") {
    for (int p = 0; p <= 6; ++p) {
        const auto r = cam::integrate([p](double x) { return std::pow(x, p); },
                                      0.0, 1.0);
        CHECK(r.converged);
        CHECK(std::fabs(r.value - 1.0 / (p + 1)) < 1e-14);
    }
}

TEST_CASE("split intervals add up") {
    auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
    const double whole = cam::integrate_or_throw(f, 0.0, 2.0);
    const double left = cam::integrate_or_throw(f, 0.0, 0.7);
    const double right = cam::integrate_or_throw(f, 0.7, 2.0);
    CHECK(std::fabs(whole - left - right) < 1e-12);
}

TEST_CASE("integrable endpoint singularity converges") {
    // Endpoints are never evaluated, so 1/sqrt(x) is admissible.
    const auto r = cam::integrate([](double x) { return 1.0 / std::sqrt(x); },
                                  0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 2.0) < 1e-9);
}

TEST_CASE("reversed orientation flips the sign") {
    auto f = [](double x) { return std::cos(x); };
    const double fwd = cam::integrate_or_throw(f, 0.0, 1.0);
    const double rev = cam::integrate_or_throw(f, 1.0, 0.0);
    CHECK(fwd == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(std::fabs(fwd + rev) < 1e-15);
}

TEST_CASE("exhausted interval budget reports failure") {
    cam::QuadratureOptions opt;
    opt.max_intervals = 2;
    const auto r = cam::integrate(
        [](double x) { return std::sin(1.0 / (x * x + 1e-8)); }, 0.0, 1.0, opt);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(
        cam::integrate_or_throw(
            [](double x) { return std::sin(1.0 / (x * x + 1e-8)); }, 0.0, 1.0,
            opt),
        cam::ConvergenceError);
}

TEST_CASE("error estimate is honest for smooth integrands") {
    const auto r =
        cam::integrate([](double x) { return std::exp(x); }, -1.0, 1.0);
    const double truth = std::exp(1.0) - std::exp(-1.0);
    CHECK(std::fabs(r.value - truth) <= std::max(r.error, 1e-14));
}
