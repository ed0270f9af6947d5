#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greensum/quadrature.hpp"

using namespace greensum::quadrature;

namespace {
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
}

TEST_CASE("finite integrals from the closed-form examples") {
    auto parabola = integrate_finite(Integrand([](double x) { return x * (1.0 - x); }), 0.0,
                                     1.0, 1e-12);
    CHECK(parabola.value == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(parabola.error_estimate >= 0.0);
    CHECK(parabola.evaluations >= 15);

    auto logsing = integrate_finite(
        Integrand([](double x) { return std::log(1.0 / x); }, {0.0}), 0.0, 1.0, 1e-11);
    CHECK(logsing.value == doctest::Approx(1.0).epsilon(1e-10));

    auto quartic = integrate_finite(
        Integrand([](double x) { return x * x * (1.0 - x) * (1.0 - x) / 3.0; }), 0.0, 1.0,
        1e-12);
    CHECK(quartic.value == doctest::Approx(1.0 / 90.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite integrals") {
    CHECK(integrate_semi_infinite(Integrand([](double x) { return std::exp(-x); }), 0.0, 1e-11)
              .value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite(Integrand([](double x) { return std::exp(-x * x); }), 0.0,
                                  1e-12)
              .value == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-11));
    // shifted lower limit
    CHECK(integrate_semi_infinite(Integrand([](double x) { return std::exp(-x); }), 2.0, 1e-11)
              .value == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("separable double integrals") {
    CHECK(separable_double_integral([](double x) { return x; },
                                    [](double x) { return 1.0 - x; }, 0.0, 1.0, 1e-11) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-10));
    CHECK(separable_double_integral([](double) { return 1.0; }, [](double) { return 1.0; },
                                    0.0, 1.0, 1e-11) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(separable_double_integral([](double x) { return x * x; },
                                    [](double x) { return (1.0 - x) * (1.0 - x); }, 0.0, 1.0,
                                    1e-11) == doctest::Approx(1.0 / 90.0).epsilon(1e-9));
}

TEST_CASE("splitting an interval reproduces the whole") {
    auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-x); };
    const auto whole = integrate_finite(Integrand(f), 0.0, 2.0, 1e-12);
    for (double cut : {0.3, 1.0, 1.7}) {
        const auto left = integrate_finite(Integrand(f), 0.0, cut, 1e-12);
        const auto right = integrate_finite(Integrand(f), cut, 2.0, 1e-12);
        CHECK(left.value + right.value ==
              doctest::Approx(whole.value)
                  .epsilon(1e-11));
    }
}

TEST_CASE("interior hints pre-split the interval") {
    // |x - 0.3|^{-1/2} is integrable with a hint, hopeless without endpoint
    // care; sqrt-class singularities reach ~1e-6 before refinement saturates
    auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); };
    const auto r = integrate_finite(Integrand(f, {0.3}), 0.0, 1.0, 1e-6, 4000000);
    CHECK(r.value == doctest::Approx(2.0 * (std::sqrt(0.3) + std::sqrt(0.7))).epsilon(1e-5));
}

TEST_CASE("argument validation and budget errors") {
    CHECK_THROWS_AS(integrate_finite(Integrand([](double) { return 1.0; }), 1.0, 0.0, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite(Integrand([](double) { return 1.0; }), 0.0, 1.0, -1.0),
                    std::invalid_argument);
    // a hard singularity with a tiny budget exhausts the refinement
    auto f = [](double x) { return std::log(1.0 / x); };
    CHECK_THROWS_AS(integrate_finite(Integrand(f, {0.0}), 0.0, 1.0, 1e-13, 120),
                    QuadratureError);
}
