#include "greensum/reflectionless.hpp"

#include <cmath>
#include <stdexcept>

#include "greensum/quadrature.hpp"

namespace greensum::reflectionless {

namespace {

void require_valid(int k, double alpha) {
    if (k < 0) throw std::invalid_argument("lax hierarchy: k must be >= 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("lax hierarchy: alpha must be positive");
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

double soliton_potential(double alpha, double x) {
    if (!(alpha > 0.0)) throw std::invalid_argument("soliton_potential: alpha must be positive");
    const double s = sech(alpha * x);
    return -2.0 * alpha * alpha * s * s;
}

double bound_state(double alpha, double x) {
    if (!(alpha > 0.0)) throw std::invalid_argument("bound_state: alpha must be positive");
    return std::sqrt(0.5 * alpha) * sech(alpha * x);
}

double lax_diag(int k, double alpha, double x) {
    require_valid(k, alpha);
    const double psi = bound_state(alpha, x);
    return -2.0 * std::pow(2.0 * alpha, 2 * k + 1) * psi * psi;
}

LineIntegral lax_integral(int k, double alpha, double tol) {
    require_valid(k, alpha);
    const double cut = 30.0 / alpha;
    auto f = [k, alpha](double x) { return lax_diag(k, alpha, x); };
    const double half =
        quadrature::integrate_finite(quadrature::Integrand(f), 0.0, cut, 0.5 * tol).value;
    // |L_k| <= 4 alpha (2 alpha)^{2k+1} e^{-2 alpha x} for alpha x >= 1
    const double tail =
        2.0 * std::pow(2.0 * alpha, 2 * k + 1) * std::exp(-2.0 * alpha * cut) / alpha;
    return LineIntegral{2.0 * half, tail};
}

double lax_recursion_residual(int k, double alpha, double x, double h) {
    require_valid(k, alpha);
    auto lk = [k, alpha](double y) { return lax_diag(k, alpha, y); };
    auto lk1 = [k, alpha](double y) { return lax_diag(k + 1, alpha, y); };
    auto u = [alpha](double y) { return soliton_potential(alpha, y); };

    auto d1 = [](auto f, double y, double step) {
        return (f(y + step) - f(y - step)) / (2.0 * step);
    };
    auto d3 = [](auto f, double y, double step) {
        return (f(y + 2.0 * step) - 2.0 * f(y + step) + 2.0 * f(y - step) - f(y - 2.0 * step)) /
               (2.0 * step * step * step);
    };
    auto richardson = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

    const double lhs = richardson(d1(lk1, x, h), d1(lk1, x, 0.5 * h));
    const double third = richardson(d3(lk, x, h), d3(lk, x, 0.5 * h));
    const double first = richardson(d1(lk, x, h), d1(lk, x, 0.5 * h));
    const double du = richardson(d1(u, x, h), d1(u, x, 0.5 * h));
    const double rhs = third - 4.0 * u(x) * first - 2.0 * du * lk(x);
    return lhs - rhs;
}

}  // namespace greensum::reflectionless
