#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greensum/powerlaw.hpp"
#include "greensum/specfun.hpp"

using namespace greensum;
using powerlaw::PowerLawPotential;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("potential bookkeeping") {
    const PowerLawPotential p(4.0);
    CHECK(p.nu == doctest::Approx(1.0 / 6.0));
    CHECK(p.alpha == doctest::Approx(1.0 / p.nu - 2.0));
    CHECK(p(2.0) == doctest::Approx(16.0));
    CHECK(p(-2.0) == doctest::Approx(16.0));
    CHECK(p.z(1.0) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(PowerLawPotential(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(p.z(0.0), std::domain_error);
}

TEST_CASE("zero-energy solutions and the connection formula") {
    const PowerLawPotential p(4.0);
    for (double x : {0.4, 1.0, 2.5}) {
        const auto s = powerlaw::zero_energy_solutions(p, x);
        const double z = p.z(x);
        CHECK(s.psi1 == doctest::Approx(std::sqrt(x) * specfun::bessel_k(p.nu, z)));
        const double rhs = s.psi2_plus + (2.0 / kPi) * std::sin(kPi * p.nu) * s.psi1;
        CHECK(s.psi2_minus == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("Green's kernels: symmetry and scaled evaluation at large arguments") {
    const PowerLawPotential p(4.0);
    for (auto [x, xp] : {std::pair{0.5, 1.5}, {2.0, 0.3}, {7.0, 9.0}}) {
        const double ge = powerlaw::greens_even(p, x, xp);
        CHECK(ge == powerlaw::greens_even(p, xp, x));  // bitwise symmetric
        CHECK(std::isfinite(ge));
        const double go = powerlaw::greens_odd(p, x, xp);
        CHECK(go == powerlaw::greens_odd(p, xp, x));
        // the odd kernel cannot exceed the even one (I_{+nu} <= I_{-nu});
        // at large z the two coincide to machine precision
        CHECK(std::abs(go) <= std::abs(ge));
    }
    // scaled path far beyond the naive overflow range
    CHECK(std::isfinite(powerlaw::greens_even(p, 50.0, 50.0)));
}

TEST_CASE("Gamma-form sums at pinned oracle values") {
    CHECK(powerlaw::sum_even(1.0 / 6.0) == doctest::Approx(1.526605869546946).epsilon(1e-13));
    CHECK(powerlaw::sum_odd(1.0 / 6.0) == doctest::Approx(0.763302934773473).epsilon(1e-13));
    CHECK(powerlaw::sum_alternating(1.0 / 6.0) ==
          doctest::Approx(0.763302934773473).epsilon(1e-13));
    CHECK(powerlaw::sum_even(0.2) == doctest::Approx(2.051493966488515).epsilon(1e-13));
    CHECK(powerlaw::sum_odd(0.2) == doctest::Approx(1.267892999005240).epsilon(1e-13));
    CHECK(powerlaw::sum_alternating(0.2) == doctest::Approx(0.783600967483275).epsilon(1e-13));
    CHECK(powerlaw::sum_alternating(1.0 / 3.0) ==
          doctest::Approx(0.729011132947227).epsilon(1e-13));
}

TEST_CASE("sum domains: divergence at and beyond nu = 1/4") {
    CHECK_THROWS_AS(powerlaw::sum_even(0.25), std::domain_error);
    CHECK_THROWS_AS(powerlaw::sum_odd(0.3), std::domain_error);
    CHECK_THROWS_AS(powerlaw::sum_alternating(0.5), std::domain_error);
    CHECK_THROWS_AS(powerlaw::bessel_identity(0.25, -1), std::domain_error);
    // the pole side: values blow up as nu -> 1/4 from below
    CHECK(powerlaw::sum_even(0.2499) > 300.0);
}

TEST_CASE("partner potential limits") {
    const PowerLawPotential p(4.0);
    CHECK(powerlaw::partner_potential(p, 0.0) == 0.0);
    // small-x expansion
    const double x = 1e-3;
    const double limit = -std::pow(x, 4.0) + 2.0 * std::pow(x, 10.0) / 25.0;
    CHECK(powerlaw::partner_potential(p, x) == doctest::Approx(limit).epsilon(1e-3));
    // even in x
    CHECK(powerlaw::partner_potential(p, -1.2) ==
          powerlaw::partner_potential(p, 1.2));
    // large x: U' ~ x^4 - 4x
    CHECK(powerlaw::partner_potential(p, 8.0) ==
          doctest::Approx(std::pow(8.0, 4.0) - 32.0).epsilon(1e-4));
}

TEST_CASE("partner ground state") {
    const PowerLawPotential p(4.0);
    const double at_zero = specfun::gamma(1.0 - p.nu) * std::pow(p.nu, p.nu);
    CHECK(powerlaw::partner_ground_state(p, 0.0) == doctest::Approx(at_zero).epsilon(1e-13));
    // continuous into x = 0 and even
    CHECK(powerlaw::partner_ground_state(p, 1e-8) == doctest::Approx(at_zero).epsilon(1e-10));
    CHECK(powerlaw::partner_ground_state(p, -0.7) == powerlaw::partner_ground_state(p, 0.7));
    // decays at large x
    CHECK(powerlaw::partner_ground_state(p, 3.0) < 0.01 * at_zero);
}

TEST_CASE("partner Green's function") {
    const PowerLawPotential p(4.0);
    // the inner integral vanishes linearly with x_<
    CHECK(std::abs(powerlaw::partner_greens(p, 1e-8, 0.7)) < 1e-7);
    CHECK(powerlaw::partner_greens(p, 0.4, 0.9) ==
          doctest::Approx(powerlaw::partner_greens(p, 0.9, 0.4)).epsilon(1e-12));
    CHECK(powerlaw::partner_greens(p, 0.5, 0.5) < 0.0);
}

TEST_CASE("bessel identity at nu = 1/6 and 1/5") {
    for (int sign : {-1, +1}) {
        const auto r = powerlaw::bessel_identity(1.0 / 6.0, sign);
        CHECK(r.residual < 1e-8);
        CHECK(r.nested_residual < 1e-5);
    }
    const auto r5 = powerlaw::bessel_identity(0.2, -1);
    CHECK(r5.residual < 1e-8);
}

TEST_CASE("WKB eigenvalues") {
    const PowerLawPotential osc(2.0);
    for (int n : {0, 1, 5, 20})
        CHECK(powerlaw::wkb_eigenvalue(osc, n) == doctest::Approx(2.0 * n + 1.0).epsilon(1e-13));
    const PowerLawPotential quartic(4.0);
    // large-n form: E_n = ((n + 1/2) * 1.7972...)^{4/3}
    CHECK(powerlaw::wkb_eigenvalue(quartic, 9) == doctest::Approx(43.95).epsilon(1e-3));
    CHECK_THROWS_AS(powerlaw::wkb_eigenvalue(quartic, -1), std::invalid_argument);
}

TEST_CASE("figure data layout and symmetry") {
    const auto rows = powerlaw::figure_data(4);
    CHECK(rows.size() == 801);
    CHECK(rows.front().x == doctest::Approx(-2.0));
    CHECK(rows.front().potential == doctest::Approx(16.0));
    CHECK(rows.back().potential == doctest::Approx(16.0));
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i) {
        // mirrored rows carry bitwise-identical columns
        CHECK(rows[i].potential == rows[n - 1 - i].potential);
        CHECK(rows[i].partner == rows[n - 1 - i].partner);
        CHECK(rows[i].ground_state == rows[n - 1 - i].ground_state);
    }
    CHECK_THROWS_AS(powerlaw::figure_data(3), std::invalid_argument);
    CHECK_THROWS_AS(powerlaw::figure_data(4, -2.0, 2.0, 1), std::invalid_argument);
    CHECK(powerlaw::figure_data(8, -2.0, 2.0, 101).size() == 101);
}
