#include "greensum/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "greensum/quadrature.hpp"

namespace greensum::spectral {

namespace {

using quadrature::Integrand;
using quadrature::integrate_finite;

double partial_sum(const Spectrum& s, int k, SignMode sign, int terms, double x, double xp) {
    double sum = 0.0;
    for (int j = 1; j <= terms; ++j) {
        // product of the two eigenfunction values first, so that the sum is
        // symmetric in (x, x') to the last bit
        double term = (s.psi(j, x) * s.psi(j, xp)) * std::pow(s.gammas[j - 1], k);
        if (sign == SignMode::alternating && j % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

// Central second derivative with one halving; throws when the two estimates
// disagree beyond what smooth data allows.
double second_derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
    auto d2 = [&](double step) {
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    };
    const double coarse = d2(h);
    const double fine = d2(0.5 * h);
    if (std::abs(fine - coarse) > 1e-4 * (1.0 + std::abs(fine)))
        throw std::runtime_error("recur_up: finite-difference second derivative unstable");
    return fine;
}

double first_derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Cumulative integral on a uniform grid by Simpson pairs; odd nodes get a
// 4th-order half-panel correction from the neighbouring values.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    std::vector<double> F(n, 0.0);
    for (size_t i = 2; i < n; i += 2)
        F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (size_t i = 1; i < n; i += 2) {
        if (i + 2 < n)
            F[i] = F[i - 1] +
                   h / 24.0 * (9.0 * f[i - 1] + 19.0 * f[i] - 5.0 * f[i + 1] + f[i + 2]);
        else
            F[i] = F[i - 1] +
                   h / 24.0 * (f[i - 3] - 5.0 * f[i - 2] + 19.0 * f[i - 1] + 9.0 * f[i]);
    }
    return F;
}

}  // namespace

double orthonormality_defect(const Spectrum& s, int count, double tol) {
    double worst = 0.0;
    for (int j = 1; j <= count; ++j) {
        for (int k = j; k <= count; ++k) {
            auto prod = [&](double x) { return s.psi(j, x) * s.psi(k, x); };
            const double v = integrate_finite(Integrand(prod), s.a, s.b, tol).value;
            const double target = (j == k) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(v - target));
        }
    }
    return worst;
}

KernelSeries::KernelSeries(std::shared_ptr<const Spectrum> s, int k_, SignMode sign_,
                           int truncation_)
    : spectrum(std::move(s)), k(k_), sign(sign_), truncation(truncation_) {
    if (!spectrum || !spectrum->psi) throw std::invalid_argument("KernelSeries: empty spectrum");
    if (truncation < 1) throw std::invalid_argument("KernelSeries: truncation must be >= 1");
    if (static_cast<size_t>(truncation) > spectrum->gammas.size())
        throw std::invalid_argument("KernelSeries: truncation exceeds available states");
    for (size_t j = 1; j < spectrum->gammas.size(); ++j)
        if (!(spectrum->gammas[j] > spectrum->gammas[j - 1]))
            throw std::invalid_argument("KernelSeries: gammas must increase strictly");
}

double g_k_eval(const KernelSeries& series, double x, double xp) {
    return partial_sum(*series.spectrum, series.k, series.sign, series.truncation, x, xp);
}

SeriesValue g_k_eval_with_tail(const KernelSeries& series, double x, double xp) {
    const double full = g_k_eval(series, x, xp);
    const double half =
        partial_sum(*series.spectrum, series.k, series.sign, series.truncation / 2, x, xp);
    return SeriesValue{full, std::abs(full - half)};
}

Kernel2D convolve(Kernel2D left, Kernel2D right, double a, double b, double tol,
                  SingularityMap hints) {
    return [left = std::move(left), right = std::move(right), hints = std::move(hints), a, b,
            tol](double x, double xp) {
        auto f = [&](double z) { return left(x, z) * right(z, xp); };
        std::vector<double> cuts;
        if (hints) cuts = hints(x, xp);
        return integrate_finite(Integrand(f, cuts), a, b, tol).value;
    };
}

Kernel2D convolve(const KernelSeries& left, const KernelSeries& right, double tol) {
    if (left.spectrum != right.spectrum &&
        (left.spectrum->a != right.spectrum->a || left.spectrum->b != right.spectrum->b))
        throw std::invalid_argument("convolve: kernels live on different domains");
    const double a = left.spectrum->a;
    const double b = left.spectrum->b;
    auto l = [series = left](double x, double z) { return g_k_eval(series, x, z); };
    auto r = [series = right](double z, double xp) { return g_k_eval(series, z, xp); };
    return convolve(l, r, a, b, tol);
}

std::function<double(double)> recur_up(std::function<double(double)> diag,
                                       std::function<double(double)> U, double a) {
    return [diag = std::move(diag), U = std::move(U), a](double x) {
        auto bracket = [&](double y) { return -second_derivative(diag, y) + 4.0 * U(y) * diag(y); };
        const double boundary_term = bracket(x) - bracket(a);
        double potential_term = 0.0;
        if (std::abs(x - a) > 0.0) {
            auto up_diag = [&](double y) { return first_derivative(U, y) * diag(y); };
            const double lo = std::min(a, x), hi = std::max(a, x);
            double integral = integrate_finite(Integrand(up_diag), lo, hi, 1e-11).value;
            if (x < a) integral = -integral;
            potential_term = -2.0 * integral;
        }
        return 0.25 * (boundary_term + potential_term);
    };
}

std::function<double(double)> recur_down(std::function<double(double)> diag,
                                         std::function<double(double)> U,
                                         const EndpointData& boundary, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("recur_down: requires lo < hi");
    const int n = 4001;
    const double h = (hi - lo) / (n - 1);
    std::vector<double> xs(n), rhs(n), Ug(n), dU(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + i * h;
        rhs[i] = -4.0 * first_derivative(diag, xs[i]);
        Ug[i] = U(xs[i]);
        dU[i] = first_derivative(U, xs[i]);
    }
    const int anchor_index =
        static_cast<int>(std::lround((boundary.anchor - lo) / h));
    if (anchor_index < 0 || anchor_index >= n ||
        std::abs(xs[anchor_index] - boundary.anchor) > 1e-9)
        throw std::invalid_argument("recur_down: anchor must lie on [lo, hi]");

    // Solve with the given endpoint triple; returns g and g' grids.
    auto solve = [&](const std::array<double, 3>& bc, std::vector<double>& g,
                     std::vector<double>& g1) {
        std::vector<double> g2(n);
        g.assign(n, 0.0);
        g1.assign(n, 0.0);
        std::vector<double> prev(n, 0.0);
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<double> f(n);
            for (int i = 0; i < n; ++i) f[i] = rhs[i] + 4.0 * Ug[i] * g1[i] + 2.0 * dU[i] * g[i];
            // cumulative integrals measured from the anchor
            auto cum_from_anchor = [&](const std::vector<double>& src) {
                std::vector<double> F = cumulative_integral(src, h);
                const double off = F[anchor_index];
                for (double& v : F) v -= off;
                return F;
            };
            std::vector<double> F3 = cum_from_anchor(f);
            for (int i = 0; i < n; ++i) g2[i] = bc[2] + F3[i];
            std::vector<double> F2 = cum_from_anchor(g2);
            for (int i = 0; i < n; ++i) g1[i] = bc[1] + F2[i];
            std::vector<double> F1 = cum_from_anchor(g1);
            double delta = 0.0;
            for (int i = 0; i < n; ++i) {
                const double v = bc[0] + F1[i];
                delta = std::max(delta, std::abs(v - prev[i]));
                g[i] = v;
                prev[i] = v;
            }
            if (delta < 1e-13) return;
        }
        throw std::runtime_error("recur_down: Picard iteration did not converge");
    };

    std::array<double, 3> bc = boundary.g;
    std::vector<double> g, g1;
    if (boundary.unknown > 2)
        throw std::invalid_argument("recur_down: unknown index must be 0, 1 or 2");
    if (boundary.unknown >= 0) {
        if (boundary.far_kind == EndpointData::FarKind::none)
            throw std::invalid_argument("recur_down: unknown boundary entry without far condition");
        const int far_index = static_cast<int>(std::lround((boundary.far_point - lo) / h));
        if (far_index < 0 || far_index >= n)
            throw std::invalid_argument("recur_down: far point outside [lo, hi]");
        auto far_value = [&](double trial) {
            std::array<double, 3> probe = boundary.g;
            probe[boundary.unknown] = trial;
            std::vector<double> gs, g1s;
            solve(probe, gs, g1s);
            return boundary.far_kind == EndpointData::FarKind::value ? gs[far_index]
                                                                     : g1s[far_index];
        };
        const double f0 = far_value(0.0);
        const double f1 = far_value(1.0);
        if (std::abs(f1 - f0) < 1e-12)
            throw std::runtime_error("recur_down: far-end condition cannot be met");
        bc[boundary.unknown] = (boundary.far_target - f0) / (f1 - f0);
    }
    solve(bc, g, g1);

    // cubic Hermite interpolation from (g, g')
    return [xs, g, g1, lo, hi, h, n](double x) {
        if (x < lo - 1e-12 || x > hi + 1e-12)
            throw std::domain_error("recur_down result: argument outside solution domain");
        const double clamped = std::min(std::max(x, lo), hi);
        int i = static_cast<int>((clamped - lo) / h);
        if (i >= n - 1) i = n - 2;
        const double t = (clamped - (lo + i * h)) / h;
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        return h00 * g[i] + h10 * h * g1[i] + h01 * g[i + 1] + h11 * h * g1[i + 1];
    };
}

double sum_rule(const std::function<double(double)>& diag, double a, double b, double tol) {
    return integrate_finite(Integrand(diag), a, b, tol).value;
}

}  // namespace greensum::spectral
