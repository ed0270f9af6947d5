#include "greensum/susy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "greensum/quadrature.hpp"
#include "greensum/specfun.hpp"

namespace greensum::susy {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

using quadrature::Integrand;
using quadrature::integrate_finite;
using quadrature::integrate_semi_infinite;

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) throw std::runtime_error(what);
    return v;
}

// int_{x}^{b} psi^{-2}, with b possibly infinite.
double inverse_square_tail(const SeedSolution& seed, double x) {
    auto inv2 = [&seed](double z) {
        const double p = seed.psi(z);
        return 1.0 / (p * p);
    };
    double v;
    if (seed.domain.semi_infinite())
        v = integrate_semi_infinite(Integrand(inv2), x, 1e-12).value;
    else if (x >= seed.domain.b)
        v = 0.0;
    else
        v = integrate_finite(Integrand(inv2), x, seed.domain.b, 1e-13).value;
    return finite_or_throw(v, "greens_two_solution: psi^-2 integral diverges");
}

}  // namespace

bool Domain::semi_infinite() const { return std::isinf(b); }

bool is_nodeless(const SeedSolution& seed, int samples) {
    const double hi = seed.domain.semi_infinite() ? seed.domain.a + 50.0 : seed.domain.b;
    const double lo = seed.domain.a;
    int sign = 0;
    for (int i = 1; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / samples;
        const double v = seed.psi(x);
        if (v == 0.0) return false;
        const int s = v > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

bool partner_ground_normalizable(const SeedSolution& seed) {
    auto inv2 = [&seed](double z) {
        const double p = seed.psi(z);
        return 1.0 / (p * p);
    };
    // Shrink the endpoint insets; divergence shows up as unbounded growth.
    double prev = 0.0;
    for (int k = 2; k <= 6; k += 2) {
        const double inset = std::pow(10.0, -k);
        const double lo = seed.domain.a + inset;
        double v;
        try {
            if (seed.domain.semi_infinite())
                v = integrate_semi_infinite(Integrand(inv2), lo, 1e-9).value;
            else
                v = integrate_finite(Integrand(inv2), lo, seed.domain.b - inset, 1e-9).value;
        } catch (const quadrature::QuadratureError&) {
            return false;
        }
        if (!std::isfinite(v)) return false;
        if (k > 2 && v > 3.0 * std::max(prev, 1e-30)) return false;
        prev = v;
    }
    return true;
}

double seed_equation_residual(const SeedSolution& seed, const std::function<double(double)>& U,
                              double x) {
    const double h = 1e-4;
    const double p = seed.psi(x);
    const double d2 = (seed.psi(x + h) - 2.0 * p + seed.psi(x - h)) / (h * h);
    return std::abs(d2 / p - U(x) + seed.epsilon);
}

SusyPair make_pair(std::function<double(double)> U, SeedSolution seed) {
    SusyPair pair;
    pair.U = U;
    pair.seed = seed;
    pair.partner_normalizable = partner_ground_normalizable(seed);
    pair.partner_U = [U = std::move(U), seed](double x) {
        const double w = seed.dpsi(x) / seed.psi(x);
        return -U(x) + 2.0 * seed.epsilon + 2.0 * w * w;
    };
    return pair;
}

double greens_two_solution(const SeedSolution& seed, double x, double xp) {
    const double xhi = std::max(x, xp);
    const double xlo = std::min(x, xp);
    // companion psi'(x) = psi(x) int_b^x psi^-2 = -psi(x) * tail(x)
    return -seed.psi(xlo) * seed.psi(xhi) * inverse_square_tail(seed, xhi);
}

double partner_greens(const SeedSolution& seed, double x, double xp) {
    const double xlo = std::min(x, xp);
    auto sq = [&seed](double y) {
        const double p = seed.psi(y);
        return p * p;
    };
    if (xlo <= seed.domain.a) return 0.0;
    const double head = integrate_finite(Integrand(sq), seed.domain.a, xlo, 1e-13).value;
    return -head / (seed.psi(x) * seed.psi(xp));
}

SecondOrderSum second_order_sum(const std::function<double(double)>& greens_diag,
                                const std::function<double(double)>& partner_diag, Domain domain,
                                double tol) {
    auto base = [&](double x) {
        const double g = greens_diag(x);
        return g * g * partner_diag(x);
    };
    auto partner = [&](double x) {
        const double gp = partner_diag(x);
        return gp * gp * greens_diag(x);
    };
    SecondOrderSum s;
    if (domain.semi_infinite()) {
        s.via_base = -2.0 * integrate_semi_infinite(Integrand(base), domain.a, tol).value;
        s.via_partner = -2.0 * integrate_semi_infinite(Integrand(partner), domain.a, tol).value;
    } else {
        s.via_base = -2.0 * integrate_finite(Integrand(base), domain.a, domain.b, tol).value;
        s.via_partner = -2.0 * integrate_finite(Integrand(partner), domain.a, domain.b, tol).value;
    }
    return s;
}

std::function<double(double)> partner_eigenfunction(std::function<double(double)> psi_j,
                                                    std::function<double(double)> dpsi_j,
                                                    double gamma_j, const SeedSolution& seed) {
    const double gap = gamma_j * gamma_j - seed.epsilon;
    if (!(gap > 0.0))
        throw std::invalid_argument("partner_eigenfunction: gamma^2 must exceed the seed energy");
    const double scale = 1.0 / std::sqrt(gap);
    return [scale, psi_j = std::move(psi_j), dpsi_j = std::move(dpsi_j), seed](double x) {
        const double w = seed.dpsi(x) / seed.psi(x);
        return scale * (dpsi_j(x) - w * psi_j(x));
    };
}

OscillatorReport oscillator_suite(double tol) {
    // G(x,x)  = -(sqrt(pi)/2) erfcx(x)   (seed exp(x^2/2), epsilon = -1)
    // G'(x,x) = -dawson(x)
    auto g = [](double x) { return -0.5 * kSqrtPi * specfun::erfcx(x); };
    auto gp = [](double x) { return -specfun::dawson(x); };
    const SecondOrderSum s =
        second_order_sum(g, gp, Domain{0.0, std::numeric_limits<double>::infinity()}, tol);
    OscillatorReport report;
    report.ss1 = s.via_base;
    report.ss2 = s.via_partner;
    report.ss3 = kPi * kPi / 32.0;
    report.max_residual =
        std::max(std::abs(report.ss1 - report.ss3), std::abs(report.ss2 - report.ss3));
    return report;
}

}  // namespace greensum::susy
