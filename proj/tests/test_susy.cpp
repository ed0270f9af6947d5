#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "greensum/specfun.hpp"
#include "greensum/susy.hpp"

using namespace greensum;
using susy::Domain;
using susy::SeedSolution;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

SeedSolution box_seed() {
    return SeedSolution{0.0, [](double x) { return x; }, [](double) { return 1.0; },
                        Domain{0.0, 1.0}};
}

SeedSolution oscillator_seed() {
    return SeedSolution{-1.0, [](double x) { return std::exp(0.5 * x * x); },
                        [](double x) { return x * std::exp(0.5 * x * x); },
                        Domain{0.0, std::numeric_limits<double>::infinity()}};
}

}  // namespace

TEST_CASE("two-solution Green's function for the box seed") {
    const auto seed = box_seed();
    for (auto [x, xp] : {std::pair{0.3, 0.6}, {0.8, 0.2}, {0.5, 0.5}}) {
        const double expected = std::min(x, xp) * (std::max(x, xp) - 1.0);
        CHECK(susy::greens_two_solution(seed, x, xp) ==
              doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("free seed with a Neumann-side condition reproduces case 2") {
    SeedSolution seed{0.0, [](double) { return 1.0; }, [](double) { return 0.0; },
                      Domain{0.0, 1.0}};
    for (auto [x, xp] : {std::pair{0.3, 0.7}, {0.9, 0.1}})
        CHECK(susy::greens_two_solution(seed, x, xp) ==
              doctest::Approx(-(1.0 - std::max(x, xp))).epsilon(1e-11));
}

TEST_CASE("oscillator diagonal matches the erfcx closed form") {
    const auto seed = oscillator_seed();
    for (double x : {0.2, 0.8, 1.6})
        CHECK(susy::greens_two_solution(seed, x, x) ==
              doctest::Approx(-0.5 * kSqrtPi * specfun::erfcx(x)).epsilon(1e-8));
}

TEST_CASE("partner Green's function for the box seed") {
    const auto seed = box_seed();
    for (auto [x, xp] : {std::pair{0.3, 0.6}, {0.7, 0.2}}) {
        const double xlo = std::min(x, xp), xhi = std::max(x, xp);
        CHECK(susy::partner_greens(seed, x, xp) ==
              doctest::Approx(-xlo * xlo / (3.0 * xhi)).epsilon(1e-10));
    }
    CHECK(susy::partner_greens(seed, 1.0, 1.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
    // oscillator partner diagonal is (minus) the Dawson integral
    const auto osc = oscillator_seed();
    for (double x : {0.5, 1.2})
        CHECK(susy::partner_greens(osc, x, x) ==
              doctest::Approx(-specfun::dawson(x)).epsilon(1e-9));
}

TEST_CASE("second-order sum in both orderings for the box") {
    const auto seed = box_seed();
    auto gd = [&seed](double x) { return susy::greens_two_solution(seed, x, x); };
    auto gpd = [&seed](double x) { return susy::partner_greens(seed, x, x); };
    const auto s = susy::second_order_sum(gd, gpd, seed.domain, 1e-11);
    CHECK(s.via_base == doctest::Approx(1.0 / 90.0).epsilon(1e-9));
    CHECK(s.via_partner == doctest::Approx(1.0 / 90.0).epsilon(1e-9));
}

TEST_CASE("partner eigenfunctions of the box") {
    const auto seed = box_seed();
    const double g1 = kPi;
    auto p1 = susy::partner_eigenfunction(
        [](double x) { return std::sqrt(2.0) * std::sin(kPi * x); },
        [](double x) { return std::sqrt(2.0) * kPi * std::cos(kPi * x); }, g1, seed);
    // spherical-Bessel form: psi'_1(x) = -sqrt(2) (pi x) j1(pi x)
    for (double x : {0.1, 0.5, 0.9})
        CHECK(p1(x) == doctest::Approx(-std::sqrt(2.0) * kPi * x *
                                       specfun::spherical_j1(kPi * x))
                           .epsilon(1e-12));
    CHECK(p1(1.0) * p1(1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(susy::partner_eigenfunction([](double) { return 0.0; },
                                                [](double) { return 0.0; }, 0.0, seed),
                    std::invalid_argument);
}

TEST_CASE("oscillator suite hits pi^2/32") {
    const auto rep = susy::oscillator_suite();
    CHECK(rep.ss3 == doctest::Approx(kPi * kPi / 32.0));
    CHECK(rep.ss1 == doctest::Approx(rep.ss3).epsilon(1e-7));
    CHECK(rep.ss2 == doctest::Approx(rep.ss3).epsilon(1e-7));
    CHECK(rep.max_residual < 1e-6);
}

TEST_CASE("pair construction and classification") {
    auto box = susy::make_pair([](double) { return 0.0; }, box_seed());
    CHECK_FALSE(box.partner_normalizable);
    for (double x : {0.25, 0.5})
        CHECK(box.partner_U(x) == doctest::Approx(2.0 / (x * x)).epsilon(1e-12));

    auto osc = susy::make_pair([](double x) { return x * x; }, oscillator_seed());
    CHECK(osc.partner_normalizable);
    CHECK(osc.partner_U(1.3) == doctest::Approx(1.3 * 1.3 - 2.0).epsilon(1e-12));

    CHECK(susy::is_nodeless(box_seed()));
    CHECK(susy::seed_equation_residual(oscillator_seed(), [](double x) { return x * x; },
                                       0.7) < 1e-6);
}
