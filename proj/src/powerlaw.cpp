#include "greensum/powerlaw.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "greensum/eigensolve.hpp"
#include "greensum/quadrature.hpp"
#include "greensum/specfun.hpp"

namespace greensum::powerlaw {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

using quadrature::Integrand;
using quadrature::integrate_finite;
using specfun::bessel_i;
using specfun::bessel_i_scaled;
using specfun::bessel_k;
using specfun::bessel_k_scaled;
using specfun::gamma;

void require_positive_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("powerlaw: requires x > 0");
}

// Asymptotic tail int_Z^inf z^{4nu-1} I_{+-nu}(z) K_nu(z) dz from
// I K ~ (1/2z)(1 + p2/z^2 + p4/z^4); the product expansion depends on nu only
// through mu = 4 nu^2, so both sign choices share it.
double product_tail(double nu, double Z) {
    const double mu = 4.0 * nu * nu;
    const double a1 = (mu - 1.0) / 8.0;
    const double a2 = (mu - 1.0) * (mu - 9.0) / 128.0;
    const double a3 = (mu - 1.0) * (mu - 9.0) * (mu - 25.0) / 3072.0;
    const double a4 = (mu - 1.0) * (mu - 9.0) * (mu - 25.0) * (mu - 49.0) / 98304.0;
    const double p2 = 2.0 * a2 - a1 * a1;
    const double p4 = 2.0 * a4 - 2.0 * a1 * a3 + a2 * a2;
    const double s = 4.0 * nu;
    return 0.5 * (std::pow(Z, s - 1.0) / (1.0 - s) + p2 * std::pow(Z, s - 3.0) / (3.0 - s) +
                  p4 * std::pow(Z, s - 5.0) / (5.0 - s));
}

// J = int_0^inf x I_{sign nu}(z(x)) K_nu(z(x)) dx, finite part to Z = z_cut
// plus the z-space tail.
double product_integral_x(double nu, int sign, double tol, double z_cut = 40.0) {
    const double half_exp = 0.5 / nu;  // x = (z/(2 nu))^{2 nu}
    const double X = std::pow(z_cut / (2.0 * nu), 2.0 * nu);
    const double order = sign < 0 ? -nu : nu;
    auto f = [=](double x) {
        const double z = 2.0 * nu * std::pow(x, half_exp);
        return x * bessel_i_scaled(order, z) * bessel_k_scaled(nu, z);
    };
    const double finite = integrate_finite(Integrand(f), 0.0, X, tol).value;
    const double tail = std::pow(2.0 * nu, 1.0 - 4.0 * nu) * product_tail(nu, z_cut);
    return finite + tail;
}

// Cached running integral F(x) = int_0^x g(y) dy for increasing scattered x.
class RunningIntegral {
  public:
    explicit RunningIntegral(std::function<double(double)> g) : g_(std::move(g)) {
        cache_[0.0] = 0.0;
    }
    double operator()(double x) {
        auto it = cache_.upper_bound(x);
        --it;  // largest cached point <= x (0.0 always present)
        double base_x = it->first, base_v = it->second;
        if (x == base_x) return base_v;
        // absolute tolerance scaled to the increment's magnitude
        const double scale =
            std::abs(g_(0.5 * (base_x + x))) * (x - base_x) + std::abs(base_v);
        const double tol = 1e-13 * std::max(1.0, scale);
        const double inc = integrate_finite(Integrand(g_), base_x, x, tol, 600000).value;
        const double v = base_v + inc;
        cache_[x] = v;
        return v;
    }

  private:
    std::function<double(double)> g_;
    std::map<double, double> cache_;
};

double gamma_rhs(double nu, int sign) {
    if (!(nu > 0.0 && nu < 0.25))
        throw std::domain_error("bessel_identity: requires nu in (0, 1/4)");
    const double pre = std::pow(2.0, 4.0 * nu - 2.0);
    if (sign < 0)
        return pre * gamma(2.0 * nu) * gamma(nu) * gamma(1.0 - 4.0 * nu) /
               (gamma(1.0 - 3.0 * nu) * gamma(1.0 - 2.0 * nu));
    return pre * gamma(3.0 * nu) * gamma(2.0 * nu) * gamma(1.0 - 4.0 * nu) /
           (gamma(1.0 - 2.0 * nu) * gamma(1.0 - nu));
}

// Hurwitz zeta(s, q) by Euler-Maclaurin; s > 1, q > 0.
double hurwitz_zeta(double s, double q) {
    static const double bern[4] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    const int K = 12;
    double sum = 0.0;
    for (int k = 0; k < K; ++k) sum += std::pow(q + k, -s);
    const double t = q + K;
    sum += std::pow(t, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(t, -s);
    double fact = s;          // rising product s (s+1) ... (s + 2j - 2)
    double tp = std::pow(t, -s - 1.0);
    double factorial = 2.0;   // (2j)!
    for (int j = 1; j <= 4; ++j) {
        sum += bern[j - 1] / factorial * fact * tp;
        fact *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        tp /= t * t;
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

}  // namespace

PowerLawPotential::PowerLawPotential(double a) : alpha(a), nu(1.0 / (a + 2.0)) {
    if (!(a > 0.0)) throw std::invalid_argument("PowerLawPotential: alpha must be positive");
}

double PowerLawPotential::z(double x) const {
    require_positive_x(x);
    return 2.0 * nu * std::pow(x, 0.5 / nu);
}

double PowerLawPotential::operator()(double x) const { return std::pow(std::abs(x), alpha); }

ZeroEnergySolutions zero_energy_solutions(const PowerLawPotential& p, double x) {
    const double zz = p.z(x);
    const double r = std::sqrt(x);
    return ZeroEnergySolutions{r * bessel_k(p.nu, zz), r * bessel_i(p.nu, zz),
                               r * bessel_i(-p.nu, zz)};
}

namespace {
double greens_impl(const PowerLawPotential& p, double order_sign, double x, double xp) {
    require_positive_x(std::min(x, xp));
    const double zlo = p.z(std::min(x, xp));
    const double zhi = p.z(std::max(x, xp));
    if (!std::isfinite(zhi)) return 0.0;  // kernel decays at infinity
    const double gap = (x == xp) ? 0.0 : zlo - zhi;
    const double scaled = bessel_i_scaled(order_sign * p.nu, zlo) * bessel_k_scaled(p.nu, zhi);
    return -2.0 * p.nu * std::sqrt(x * xp) * scaled * std::exp(gap);
}
}  // namespace

double greens_even(const PowerLawPotential& p, double x, double xp) {
    return greens_impl(p, -1.0, x, xp);
}

double greens_odd(const PowerLawPotential& p, double x, double xp) {
    return greens_impl(p, +1.0, x, xp);
}

double sum_even(double nu) {
    if (!(nu > 0.0 && nu < 0.25))
        throw std::domain_error("sum_even: requires nu in (0, 1/4), i.e. alpha > 2");
    return std::pow(nu, 2.0 - 4.0 * nu) * gamma(2.0 * nu) * gamma(nu) * gamma(1.0 - 4.0 * nu) /
           (gamma(1.0 - 3.0 * nu) * gamma(1.0 - 2.0 * nu));
}

double sum_odd(double nu) {
    if (!(nu > 0.0 && nu < 0.25))
        throw std::domain_error("sum_odd: requires nu in (0, 1/4), i.e. alpha > 2");
    return std::pow(nu, 2.0 - 4.0 * nu) * gamma(3.0 * nu) * gamma(2.0 * nu) *
           gamma(1.0 - 4.0 * nu) / (gamma(1.0 - 2.0 * nu) * gamma(1.0 - nu));
}

double sum_alternating(double nu) {
    if (!(nu > 0.0 && nu < 0.5))
        throw std::domain_error("sum_alternating: requires nu in (0, 1/2)");
    const double g2 = gamma(2.0 * nu);
    return std::pow(nu, 2.0 - 4.0 * nu) * gamma(3.0 * nu) * g2 * g2 /
           (gamma(4.0 * nu) * gamma(1.0 - nu));
}

double sum_even_by_quadrature(double nu, double tol) {
    return 2.0 * nu * product_integral_x(nu, -1, tol);
}

double sum_odd_by_quadrature(double nu, double tol) {
    return 2.0 * nu * product_integral_x(nu, +1, tol);
}

double sum_alternating_by_quadrature(double nu, double tol) {
    if (!(nu > 0.0 && nu < 0.5))
        throw std::domain_error("sum_alternating_by_quadrature: requires nu in (0, 1/2)");
    // Difference of the two Green's diagonals out to moderate z, then the
    // exact K^2 form of the remainder (the connection formula), which decays
    // like e^{-2z} and needs no cancellation care.
    const double z_cut = 12.0;
    const double X = std::pow(z_cut / (2.0 * nu), 2.0 * nu);
    const double half_exp = 0.5 / nu;
    auto diff = [=](double x) {
        const double z = 2.0 * nu * std::pow(x, half_exp);
        const double ks = bessel_k_scaled(nu, z);
        const double di = bessel_i_scaled(-nu, z) - bessel_i_scaled(nu, z);
        return 2.0 * nu * x * di * ks;
    };
    const double finite = integrate_finite(Integrand(diff), 0.0, X, tol).value;
    auto tail_f = [=](double x) {
        const double z = 2.0 * nu * std::pow(x, half_exp);
        const double ks = bessel_k_scaled(nu, z);
        return 2.0 * nu * x * (2.0 / kPi) * std::sin(kPi * nu) * ks * ks * std::exp(-2.0 * z);
    };
    // e^{-2z} decay: a finite window suffices
    const double X2 = std::pow(30.0 / (2.0 * nu), 2.0 * nu);
    const double tail = integrate_finite(Integrand(tail_f), X, X2, tol).value;
    return finite + tail;
}

double partner_diag_sum_by_quadrature(double nu, int sign, double tol) {
    // -int_0^inf G'(x,x) dx = int_0^X inner(x)/(x I^2) dx
    //                        + 2 nu (K/I)(Z) inner(X) + tail(Z)
    // with inner(x) = int_0^x y I^2(z(y)) dy; the exchange-of-order identity
    // makes the split exact.
    const double z_cut = 40.0;
    const double X = std::pow(z_cut / (2.0 * nu), 2.0 * nu);
    const double half_exp = 0.5 / nu;
    const double order = sign < 0 ? -nu : nu;
    auto zf = [=](double x) { return 2.0 * nu * std::pow(x, half_exp); };
    auto i2 = [=](double x) {
        const double z = zf(x);
        const double is = bessel_i_scaled(order, z);
        return is * is * std::exp(2.0 * z);
    };
    RunningIntegral inner([=](double y) { return y * i2(y); });
    auto outer = [&](double x) { return inner(x) / (x * i2(x)); };
    const double finite = integrate_finite(Integrand(outer), 0.0, X, tol, 4000000).value;
    const double ki_ratio = bessel_k_scaled(nu, z_cut) / bessel_i_scaled(order, z_cut) *
                            std::exp(-2.0 * z_cut);
    const double boundary = 2.0 * nu * ki_ratio * inner(X);
    const double tail = std::pow(2.0 * nu, 2.0 - 4.0 * nu) * product_tail(nu, z_cut);
    return finite + boundary + tail;
}

double partner_potential(const PowerLawPotential& p, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    const double z = p.z(ax);
    const double ratio = bessel_i_scaled(1.0 - p.nu, z) / bessel_i_scaled(-p.nu, z);
    return std::pow(ax, p.alpha) * (-1.0 + 2.0 * ratio * ratio);
}

double partner_ground_state(const PowerLawPotential& p, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return gamma(1.0 - p.nu) * std::pow(p.nu, p.nu);
    const double z = p.z(ax);
    const double psi = std::sqrt(ax) * bessel_i(-p.nu, z);
    return 1.0 / psi;
}

double partner_greens(const PowerLawPotential& p, double x, double xp) {
    require_positive_x(std::min(x, xp));
    auto psi2 = [&p](double y) {
        const double z = p.z(y);
        const double v = bessel_i(-p.nu, z);
        return y * v * v;
    };
    const double xlo = std::min(x, xp);
    const double head = integrate_finite(Integrand(psi2), 0.0, xlo, 1e-12).value;
    const double pa = std::sqrt(x) * bessel_i(-p.nu, p.z(x));
    const double pb = std::sqrt(xp) * bessel_i(-p.nu, p.z(xp));
    return -head / (pa * pb);
}

BesselIdentityReport bessel_identity(double nu, int sign) {
    BesselIdentityReport r;
    r.nu = nu;
    r.sign = sign;
    r.rhs_gamma = gamma_rhs(nu, sign);
    const double jx = product_integral_x(nu, sign, 1e-11);
    r.lhs_quadrature = std::pow(2.0 * nu, 4.0 * nu - 1.0) * jx;
    const double nested_sum = partner_diag_sum_by_quadrature(nu, sign, 1e-8);
    r.nested_double = std::pow(2.0 * nu, 4.0 * nu - 2.0) * nested_sum;
    r.residual = std::abs(r.lhs_quadrature - r.rhs_gamma);
    r.nested_residual = std::abs(r.nested_double - r.rhs_gamma);
    return r;
}

double wkb_eigenvalue(const PowerLawPotential& p, int n) {
    if (n < 0) throw std::invalid_argument("wkb_eigenvalue: n must be >= 0");
    const double a = p.alpha;
    const double c =
        kSqrtPi * (a + 2.0) * gamma((a + 2.0) / (2.0 * a)) / (2.0 * gamma(1.0 / a));
    return std::pow((n + 0.5) * c, 2.0 * a / (a + 2.0));
}

EigenSumReport eigenvalue_sums(double alpha, int states_per_parity) {
    const PowerLawPotential p(alpha);
    const int top = 2 * states_per_parity;
    const double e_top = wkb_eigenvalue(p, top);
    const double x_max = std::pow(e_top + 40.0, 1.0 / alpha) + 0.5;
    auto U = [alpha](double x) { return std::pow(std::abs(x), alpha); };
    auto even = eigensolve::solve_spectrum(
        eigensolve::half_line(U, eigensolve::Parity::even, x_max), states_per_parity);
    auto odd = eigensolve::solve_spectrum(
        eigensolve::half_line(U, eigensolve::Parity::odd, x_max), states_per_parity);

    EigenSumReport rep;
    rep.states_per_parity = states_per_parity;
    double se = 0.0, so = 0.0;
    for (const auto& s : even) se += 1.0 / s.energy;
    for (const auto& s : odd) so += 1.0 / s.energy;

    // WKB tail: overall indices m >= 2 * states_per_parity; even states are
    // m = 2j (gap (m + 1/2) = 2 (j + 1/4)), odd are m = 2j + 1.
    const double a = alpha;
    const double c = kSqrtPi * (a + 2.0) * gamma((a + 2.0) / (2.0 * a)) / (2.0 * gamma(1.0 / a));
    const double s_exp = 2.0 * a / (a + 2.0);
    const double pre = std::pow(2.0 * c, -s_exp);
    const int j0 = states_per_parity;
    rep.tail_even = pre * hurwitz_zeta(s_exp, j0 + 0.25);
    rep.tail_odd = pre * hurwitz_zeta(s_exp, j0 + 0.75);
    rep.even_sum = se + rep.tail_even;
    rep.odd_sum = so + rep.tail_odd;
    rep.alternating_sum = (se - so) + (rep.tail_even - rep.tail_odd);
    return rep;
}

std::vector<FigureRow> figure_data(int n, double lo, double hi, int samples) {
    if (n != 2 && n != 4 && n != 6 && n != 8)
        throw std::invalid_argument("figure_data: n must be one of 2, 4, 6, 8");
    if (samples < 2) throw std::invalid_argument("figure_data: samples must be >= 2");
    const PowerLawPotential p(static_cast<double>(n));
    std::vector<FigureRow> rows(samples);
    const double step = (hi - lo) / (samples - 1);
    // midpoint-anchored grid: for a symmetric range the mirrored abscissas
    // negate exactly, so the even columns are bitwise symmetric
    const double mid = 0.5 * (lo + hi);
    const double center = 0.5 * (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = mid + (i - center) * step;
        const double ax = std::abs(x);
        rows[i] = FigureRow{x, std::pow(ax, static_cast<double>(n)), partner_potential(p, ax),
                            partner_ground_state(p, ax)};
    }
    return rows;
}

}  // namespace greensum::powerlaw
