#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greensum/boxlab.hpp"
#include "greensum/spectral.hpp"

using namespace greensum;
using boxlab::BoundaryCase;
using spectral::KernelSeries;
using spectral::SignMode;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("KernelSeries construction validates its inputs") {
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 100);
    CHECK_THROWS_AS(KernelSeries(spec, -2, SignMode::uniform, 0), std::invalid_argument);
    CHECK_THROWS_AS(KernelSeries(spec, -2, SignMode::uniform, 101), std::invalid_argument);
    CHECK_NOTHROW(KernelSeries(spec, -2, SignMode::uniform, 100));
}

TEST_CASE("partial sums against closed forms") {
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 10000);
    KernelSeries s(spec, -2, SignMode::uniform, 10000);
    // off-diagonal: tail cancels, closed form is x_<(1 - x_>)
    CHECK(spectral::g_k_eval(s, 0.25, 0.5) == doctest::Approx(0.125).epsilon(1e-6));
    // Dirichlet endpoint
    CHECK(spectral::g_k_eval(s, 0.0, 0.37) == 0.0);

    auto spec4 = boxlab::make_spectrum(BoundaryCase::neumann_neumann, 10000);
    KernelSeries s4(spec4, -2, SignMode::uniform, 10000);
    CHECK(spectral::g_k_eval(s4, 0.3, 0.3) ==
          doctest::Approx(1.0 / 3.0 - 0.3 + 0.09).epsilon(2e-4));
}

TEST_CASE("tail estimate bounds the truncation error") {
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 10000);
    KernelSeries s(spec, -2, SignMode::uniform, 10000);
    const auto v = spectral::g_k_eval_with_tail(s, 0.3, 0.3);
    const double truth = boxlab::closed_form_g(BoundaryCase::dirichlet_dirichlet, -2, 0.3, 0.3);
    CHECK(std::abs(v.value - truth) <= 5.0 * v.tail_estimate);
}

TEST_CASE("truncation monotonicity for positive diagonal terms") {
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 400);
    double prev = 0.0;
    for (int j : {50, 100, 200, 400}) {
        KernelSeries s(spec, -2, SignMode::uniform, j);
        const double v = spectral::g_k_eval(s, 0.41, 0.41);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("orthonormality defect of the box spectra") {
    auto spec = boxlab::make_spectrum(BoundaryCase::neumann_dirichlet, 10);
    CHECK(spectral::orthonormality_defect(*spec, 5) < 1e-8);
}

TEST_CASE("convolution of alternating step kernels gives case-2 g_{-2}") {
    // f_{-1} = Theta(1 - x - x') for case 2
    auto theta = [](double x, double z) { return x + z <= 1.0 ? 1.0 : 0.0; };
    auto hints = [](double x, double xp) { return std::vector<double>{1.0 - x, 1.0 - xp}; };
    auto composed = spectral::convolve(theta, theta, 0.0, 1.0, 1e-11, hints);
    for (auto [x, xp] : {std::pair{0.3, 0.4}, {0.7, 0.2}, {0.6, 0.6}})
        CHECK(composed(x, xp) == doctest::Approx(1.0 - std::max(x, xp)).epsilon(1e-9));
}

TEST_CASE("convolution of truncated series uses orthonormality") {
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 12);
    KernelSeries a(spec, -1, SignMode::uniform, 12);
    KernelSeries b(spec, -1, SignMode::uniform, 12);
    KernelSeries target(spec, -2, SignMode::uniform, 12);
    auto composed = spectral::convolve(a, b, 1e-11);
    CHECK(composed(0.3, 0.8) == doctest::Approx(spectral::g_k_eval(target, 0.3, 0.8)).epsilon(1e-9));
    // alternating x alternating -> uniform
    KernelSeries fa(spec, -1, SignMode::alternating, 12);
    auto composed_alt = spectral::convolve(fa, fa, 1e-11);
    CHECK(composed_alt(0.3, 0.8) ==
          doctest::Approx(spectral::g_k_eval(target, 0.3, 0.8)).epsilon(1e-9));
}

TEST_CASE("recur_up maps g_{-4} diagonals to g_{-2} diagonals") {
    auto zero_u = [](double) { return 0.0; };
    auto up1 = spectral::recur_up(
        [](double x) { return x * x * (1.0 - x) * (1.0 - x) / 3.0; }, zero_u, 0.0);
    for (double x : {0.1, 0.35, 0.6, 0.9})
        CHECK(up1(x) == doctest::Approx(x * (1.0 - x)).epsilon(1e-7));

    // case 2 anchors at x = 1, the endpoint where the diagonals vanish
    auto up2 = spectral::recur_up(
        [](double x) { return (1.0 - x) * (1.0 - x) * (2.0 * x + 1.0) / 3.0; }, zero_u, 1.0);
    for (double x : {0.1, 0.35, 0.6, 0.9})
        CHECK(up2(x) == doctest::Approx(1.0 - x).epsilon(1e-7));

    auto up0 = spectral::recur_up([](double) { return 0.0; }, zero_u, 0.0);
    CHECK(up0(0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("recur_down with explicit and far-end boundary data") {
    auto zero_u = [](double) { return 0.0; };
    // trivial input: everything zero
    spectral::EndpointData bc;
    bc.anchor = 0.0;
    auto zero = spectral::recur_down([](double) { return 0.0; }, zero_u, bc, 0.0, 1.0);
    CHECK(zero(0.3) == doctest::Approx(0.0).epsilon(1e-12));

    // an unsatisfiable far-end condition: the unknown has no effect there
    spectral::EndpointData bad;
    bad.anchor = 0.0;
    bad.unknown = 2;
    bad.far_kind = spectral::EndpointData::FarKind::derivative;
    bad.far_point = 0.0;  // g'(anchor) ignores g''(anchor)
    bad.far_target = 1.0;
    CHECK_THROWS_AS(
        spectral::recur_down([](double x) { return x; }, zero_u, bad, 0.0, 1.0),
        std::runtime_error);

    // outside the solution domain
    spectral::EndpointData ok;
    ok.anchor = 0.0;
    auto g = spectral::recur_down([](double) { return 0.0; }, zero_u, ok, 0.0, 1.0);
    CHECK_THROWS_AS(g(1.5), std::domain_error);
}

TEST_CASE("sum rules by quadrature of the diagonals") {
    CHECK(spectral::sum_rule([](double x) { return x * (1.0 - x); }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(spectral::sum_rule([](double x) { return 1.0 - x; }, 0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectral::sum_rule(
              [](double x) { return 1.0 / 45.0 - x * x * (1.0 - x) * (1.0 - x) / 3.0; }, 0.0,
              1.0) == doctest::Approx(1.0 / 90.0).epsilon(1e-10));
    // series route through a truncated diagonal
    auto spec = boxlab::make_spectrum(BoundaryCase::dirichlet_dirichlet, 200);
    KernelSeries s(spec, -2, SignMode::uniform, 200);
    const double v =
        spectral::sum_rule([&s](double x) { return spectral::g_k_eval(s, x, x); }, 0.0, 1.0,
                           1e-9);
    double partial = 0.0;
    for (int j = 1; j <= 200; ++j) partial += 1.0 / (j * j * kPi * kPi);
    CHECK(v == doctest::Approx(partial).epsilon(1e-8));
}
