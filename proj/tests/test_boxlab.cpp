#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greensum/boxlab.hpp"

using namespace greensum::boxlab;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("eigenvalue rules per case") {
    CHECK(gamma_j(BoundaryCase::dirichlet_dirichlet, 3) == doctest::Approx(3.0 * kPi));
    CHECK(gamma_j(BoundaryCase::neumann_dirichlet, 1) == doctest::Approx(0.5 * kPi));
    CHECK(gamma_j(BoundaryCase::dirichlet_neumann, 2) == doctest::Approx(1.5 * kPi));
    CHECK(gamma_j(BoundaryCase::neumann_neumann, 2) == doctest::Approx(2.0 * kPi));
    CHECK_THROWS_AS(gamma_j(BoundaryCase::dirichlet_dirichlet, 0), std::invalid_argument);
}

TEST_CASE("closed forms at pinned points") {
    CHECK(closed_form_g(BoundaryCase::dirichlet_dirichlet, -2, 0.25, 0.5) ==
          doctest::Approx(0.125).epsilon(1e-15));
    CHECK(closed_form_g(BoundaryCase::neumann_dirichlet, -2, 0.3, 0.7) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(closed_form_g(BoundaryCase::dirichlet_neumann, -2, 0.3, 0.7) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(closed_form_g(BoundaryCase::neumann_neumann, -2, 0.3, 0.3) ==
          doctest::Approx(1.0 / 3.0 - 0.3 + 0.09).epsilon(1e-15));

    CHECK(closed_form_g(BoundaryCase::dirichlet_neumann, -4, 0.5, 0.5) ==
          doctest::Approx(0.25 - 2.0 * 0.125 / 3.0).epsilon(1e-15));
    CHECK(closed_form_g(BoundaryCase::neumann_neumann, -4, 0.0, 0.0) ==
          doctest::Approx(1.0 / 45.0).epsilon(1e-15));

    // k = -1 log form, case 1 at (0.25, 0.75)
    const double expected =
        std::log(std::sin(0.5 * kPi) / std::sin(0.25 * kPi)) / kPi;
    CHECK(closed_form_g(BoundaryCase::dirichlet_dirichlet, -1, 0.25, 0.75) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("domain and singularity guards") {
    CHECK_THROWS_AS(closed_form_g(BoundaryCase::dirichlet_dirichlet, -2, -0.1, 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(closed_form_g(BoundaryCase::dirichlet_dirichlet, -1, 0.4, 0.4),
                    SingularPoint);
    CHECK_THROWS_AS(closed_form_g(BoundaryCase::dirichlet_dirichlet, -4, 0.3, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form_g(BoundaryCase::dirichlet_dirichlet, -3, 0.3, 0.3),
                    std::invalid_argument);
    CHECK_THROWS_AS(alternating_f1(BoundaryCase::dirichlet_dirichlet, 0.5, 0.5), SingularPoint);
}

TEST_CASE("Green's functions are minus g_{-2}") {
    CHECK(greens(BoundaryCase::dirichlet_dirichlet, 0.25, 0.5) ==
          doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(greens(BoundaryCase::neumann_dirichlet, 0.3, 0.7) ==
          doctest::Approx(-0.3).epsilon(1e-15));
    CHECK(greens(BoundaryCase::neumann_neumann, 0.3, 0.3) ==
          doctest::Approx(-(1.0 / 3.0 - 0.3 + 0.09)).epsilon(1e-15));
}

TEST_CASE("alternating closed forms") {
    CHECK(alternating_f1(BoundaryCase::neumann_dirichlet, 0.3, 0.4) == 1.0);
    CHECK(alternating_f1(BoundaryCase::dirichlet_neumann, 0.3, 0.4) == 0.0);
    // boundary convention: value 1 on x + x' = 1 for both step cases
    CHECK(alternating_f1(BoundaryCase::neumann_dirichlet, 0.5, 0.5) == 1.0);
    CHECK(alternating_f1(BoundaryCase::dirichlet_neumann, 0.5, 0.5) == 1.0);
    CHECK(alternating_f1(BoundaryCase::dirichlet_dirichlet, 0.25, 0.25) ==
          doctest::Approx(std::log(std::sqrt(2.0)) / kPi).epsilon(1e-14));
    // past the x + x' = 1 line the log forms continue with |cos|
    const double past = alternating_f1(BoundaryCase::dirichlet_dirichlet, 0.7, 0.8);
    CHECK(std::isfinite(past));
    CHECK(past == doctest::Approx(std::log(std::cos(0.05 * kPi) /
                                           std::abs(std::cos(0.75 * kPi))) /
                                  kPi)
                      .epsilon(1e-13));
    CHECK(std::isfinite(alternating_f1(BoundaryCase::neumann_neumann, 0.7, 0.8)));
}

TEST_CASE("identity checks at single points") {
    auto q1 = identity_check("q1", {{0.25, 0.5}}, 1e-6);
    CHECK(q1.max_residual < 1e-6);
    auto q4 = identity_check("q4", {{0.3, 0.3}}, 1e-6);
    CHECK(q4.max_residual < 1e-6);
    auto q6 = identity_check("q6", {{0.2, 0.6}, {0.9, 0.8}}, 1e-8);
    CHECK(q6.max_residual < 1e-10);  // piecewise-constant integrand, exact split
    // alternating log kernels, including points beyond x + x' = 1
    auto q5 = identity_check("q5", {{0.25, 0.5}, {0.7, 0.8}}, 1e-6);
    CHECK(q5.max_residual < 1e-6);
    CHECK(q5.residuals[0] > 0.0);  // a vanishing residual would mean a dead check
    auto q8 = identity_check("q8", {{0.3, 0.3}, {0.85, 0.6}}, 1e-6);
    CHECK(q8.max_residual < 1e-6);
    CHECK(q8.residuals[0] > 0.0);
    CHECK_THROWS_AS(identity_check("q9", {{0.5, 0.25}}, 1e-6), std::invalid_argument);
}

TEST_CASE("case-4 weak form") {
    CHECK(case4_weak_check([](double) { return 1.0; }, [](double) { return 0.0; }) < 1e-10);
    CHECK(case4_weak_check([](double x) { return std::cos(kPi * x); },
                           [](double x) { return -kPi * kPi * std::cos(kPi * x); }) < 1e-7);
    CHECK(case4_weak_check([](double x) { return std::cos(2.0 * kPi * x); },
                           [](double x) { return -4.0 * kPi * kPi * std::cos(2.0 * kPi * x); }) <
          1e-7);
}

TEST_CASE("interior grid layout") {
    const auto grid = interior_grid(5);
    CHECK(grid.size() == 25);
    CHECK(grid.front().first == doctest::Approx(1.0 / 6.0));
    CHECK(grid.back().second == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("k = -1 log closed forms match their defining series, all cases") {
    // the convolution identities are sign-blind, so pin the forms directly
    namespace sp = greensum::spectral;
    for (BoundaryCase c : {BoundaryCase::dirichlet_dirichlet, BoundaryCase::neumann_dirichlet,
                           BoundaryCase::dirichlet_neumann, BoundaryCase::neumann_neumann}) {
        auto spec = make_spectrum(c, 20000);
        sp::KernelSeries g(spec, -1, sp::SignMode::uniform, 20000);
        for (auto [x, xp] : {std::pair{0.3, 0.55}, {0.15, 0.8}}) {
            CHECK(sp::g_k_eval(g, x, xp) ==
                  doctest::Approx(closed_form_g(c, -1, x, xp)).epsilon(1e-3));
        }
    }
}

TEST_CASE("alternating closed forms match their defining series past x + x' = 1") {
    namespace sp = greensum::spectral;
    for (BoundaryCase c : {BoundaryCase::dirichlet_dirichlet, BoundaryCase::neumann_neumann}) {
        auto spec = make_spectrum(c, 20000);
        sp::KernelSeries f(spec, -1, sp::SignMode::alternating, 20000);
        for (auto [x, xp] : {std::pair{0.7, 0.8}, {0.2, 0.3}, {0.85, 0.6}}) {
            const double series = sp::g_k_eval(f, x, xp);
            CHECK(series == doctest::Approx(alternating_f1(c, x, xp)).epsilon(5e-4));
        }
    }
}

TEST_CASE("case 3 is case 2 reflected") {
    for (double x : {0.2, 0.45, 0.7})
        for (double xp : {0.15, 0.5, 0.95}) {
            CHECK(closed_form_g(BoundaryCase::dirichlet_neumann, -2, x, xp) ==
                  doctest::Approx(closed_form_g(BoundaryCase::neumann_dirichlet, -2, 1.0 - x,
                                                1.0 - xp))
                      .epsilon(1e-14));
        }
}
