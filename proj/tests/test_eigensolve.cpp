#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greensum/eigensolve.hpp"

using namespace greensum::eigensolve;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("box case 1 spectrum and eigenfunctions") {
    EigenProblem prob;
    prob.U = [](double) { return 0.0; };
    prob.a = 0.0;
    prob.b = 1.0;
    prob.h = 5e-4;
    ShootingSolver solver(prob);
    auto states = solver.solve(4);
    for (int j = 1; j <= 4; ++j) {
        CHECK(states[j - 1].energy == doctest::Approx(j * j * kPi * kPi).epsilon(1e-8));
        CHECK(states[j - 1].nodes == j - 1);
    }
    auto w = solver.eigenfunction(0);
    for (double x : {0.1, 0.3, 0.5, 0.8})
        CHECK(w(x) == doctest::Approx(std::sqrt(2.0) * std::sin(kPi * x)).epsilon(1e-6));
}

TEST_CASE("half-line oscillator sectors") {
    auto U = [](double x) { return x * x; };
    auto even = solve_spectrum(half_line(U, Parity::even, 7.5), 3);
    auto odd = solve_spectrum(half_line(U, Parity::odd, 7.5), 3);
    for (int n = 0; n < 3; ++n) {
        CHECK(even[n].energy == doctest::Approx(4.0 * n + 1.0).epsilon(1e-8));
        CHECK(odd[n].energy == doctest::Approx(4.0 * n + 3.0).epsilon(1e-8));
    }
}

TEST_CASE("quartic ground state against the pinned oracle") {
    ShootingSolver solver(
        half_line([](double x) { return std::pow(x, 4.0); }, Parity::even, 6.0));
    auto w = solver.eigenfunction(0);
    CHECK(w.energy == doctest::Approx(1.060362090064).epsilon(1e-8));
    CHECK(w.nodes == 0);

    // unit L2 norm on the grid
    double norm = 0.0;
    const double h = w.x[1] - w.x[0];
    for (size_t i = 0; i + 1 < w.x.size(); ++i)
        norm += 0.5 * h * (w.psi[i] * w.psi[i] + w.psi[i + 1] * w.psi[i + 1]);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(solver.rayleigh_quotient(w) == doctest::Approx(w.energy).epsilon(1e-7));
}

TEST_CASE("grid convergence under halving") {
    auto U = [](double x) { return std::pow(x, 4.0); };
    auto coarse = solve_spectrum(half_line(U, Parity::odd, 6.0, 1e-3), 2);
    auto fine = solve_spectrum(half_line(U, Parity::odd, 6.0, 5e-4), 2);
    for (int i = 0; i < 2; ++i)
        CHECK(std::abs(coarse[i].energy - fine[i].energy) < 1e-7);
}

TEST_CASE("interlacing of parity sectors") {
    auto U = [](double x) { return std::pow(x, 4.0); };
    auto even = solve_spectrum(half_line(U, Parity::even, 6.5), 5);
    auto odd = solve_spectrum(half_line(U, Parity::odd, 6.5), 5);
    for (int n = 0; n < 4; ++n) {
        CHECK(even[n].energy < odd[n].energy);
        CHECK(odd[n].energy < even[n + 1].energy);
    }
}

TEST_CASE("input validation") {
    EigenProblem prob;
    prob.U = [](double x) { return 1.0 / x; };  // infinite at the left endpoint
    prob.a = 0.0;
    prob.b = 1.0;
    CHECK_THROWS_AS(ShootingSolver{prob}, std::invalid_argument);

    EigenProblem flipped;
    flipped.U = [](double) { return 0.0; };
    flipped.a = 1.0;
    flipped.b = 0.0;
    CHECK_THROWS_AS(ShootingSolver{flipped}, std::invalid_argument);

    ShootingSolver ok(half_line([](double x) { return x * x; }, Parity::even, 6.0));
    CHECK_THROWS_AS(ok.solve(0), std::invalid_argument);
}

TEST_CASE("neumann right edge: box case 2") {
    EigenProblem prob;
    prob.U = [](double) { return 0.0; };
    prob.a = 0.0;
    prob.b = 1.0;
    prob.left = Bc::neumann;
    prob.right = Bc::dirichlet;
    prob.h = 5e-4;
    auto states = solve_spectrum(prob, 3);
    for (int j = 1; j <= 3; ++j)
        CHECK(states[j - 1].energy ==
              doctest::Approx((j - 0.5) * (j - 0.5) * kPi * kPi).epsilon(1e-8));

    // case 3: dirichlet left, neumann right shares the spectrum
    EigenProblem case3;
    case3.U = [](double) { return 0.0; };
    case3.a = 0.0;
    case3.b = 1.0;
    case3.left = Bc::dirichlet;
    case3.right = Bc::neumann;
    case3.h = 5e-4;
    auto states3 = solve_spectrum(case3, 3);
    for (int j = 1; j <= 3; ++j)
        CHECK(states3[j - 1].energy ==
              doctest::Approx((j - 0.5) * (j - 0.5) * kPi * kPi).epsilon(1e-6));
}
