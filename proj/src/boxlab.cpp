#include "greensum/boxlab.hpp"

#include <cmath>
#include <stdexcept>

#include "greensum/quadrature.hpp"

namespace greensum::boxlab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

void require_unit_square(double x, double xp) {
    if (!(x >= 0.0 && x <= 1.0 && xp >= 0.0 && xp <= 1.0))
        throw std::domain_error("boxlab: (x, x') must lie in the unit square");
}

int case_index(BoundaryCase c) { return static_cast<int>(c); }

// k = -1 closed forms without the singularity guard; used inside quadratures
// where the nodes never coincide with the singular loci. The floor on the
// separation keeps an accidental exact hit finite instead of -inf.
double g_m1_raw(BoundaryCase c, double x, double xp) {
    const double d = std::max(std::abs(x - xp), 1e-300);
    const double s = x + xp;
    switch (c) {
        case BoundaryCase::dirichlet_dirichlet:
            return std::log(std::sin(s * kPi / 2.0) / std::sin(d * kPi / 2.0)) / kPi;
        case BoundaryCase::neumann_dirichlet:
            return std::log(std::tan(s * kPi / 4.0) * std::tan(d * kPi / 4.0)) / -kPi;
        case BoundaryCase::dirichlet_neumann:
            return (std::log(1.0 / std::tan(d * kPi / 4.0)) -
                    std::log(1.0 / std::tan(s * kPi / 4.0))) /
                   kPi;
        case BoundaryCase::neumann_neumann:
            return -std::log(4.0 * std::sin(d * kPi / 2.0) * std::sin(s * kPi / 2.0)) / kPi;
    }
    throw std::invalid_argument("boxlab: unknown boundary case");
}

// The log forms carry |cos|: the alternating series is Re ln(1 + e^{i theta})
// = ln 2|cos(theta/2)|, and x + x' crosses 1 inside the unit square.
double f_m1_raw(BoundaryCase c, double x, double xp) {
    const double d = x - xp;
    const double s = x + xp;
    switch (c) {
        case BoundaryCase::dirichlet_dirichlet:
            return std::log(std::max(
                       std::abs(std::cos(d * kPi / 2.0) / std::cos(s * kPi / 2.0)), 1e-300)) /
                   kPi;
        case BoundaryCase::neumann_dirichlet:
            return s <= 1.0 ? 1.0 : 0.0;
        case BoundaryCase::dirichlet_neumann:
            return s >= 1.0 ? 1.0 : 0.0;
        case BoundaryCase::neumann_neumann:
            return std::log(std::max(
                       std::abs(4.0 * std::cos(d * kPi / 2.0) * std::cos(s * kPi / 2.0)),
                       1e-300)) /
                   kPi;
    }
    throw std::invalid_argument("boxlab: unknown boundary case");
}

double g_m2(BoundaryCase c, double x, double xp) {
    const double xlo = std::min(x, xp);
    const double xhi = std::max(x, xp);
    switch (c) {
        case BoundaryCase::dirichlet_dirichlet:
            return xlo * (1.0 - xhi);
        case BoundaryCase::neumann_dirichlet:
            return 1.0 - xhi;
        case BoundaryCase::dirichlet_neumann:
            return xlo;
        case BoundaryCase::neumann_neumann:
            return 1.0 / 3.0 - xhi + 0.5 * (x * x + xp * xp);
    }
    throw std::invalid_argument("boxlab: unknown boundary case");
}

double g_m4_diag(BoundaryCase c, double x) {
    switch (c) {
        case BoundaryCase::dirichlet_dirichlet:
            return x * x * (1.0 - x) * (1.0 - x) / 3.0;
        case BoundaryCase::neumann_dirichlet:
            return (1.0 - x) * (1.0 - x) * (2.0 * x + 1.0) / 3.0;
        case BoundaryCase::dirichlet_neumann:
            return x * x - 2.0 * x * x * x / 3.0;
        case BoundaryCase::neumann_neumann:
            return 1.0 / 45.0 - x * x * (1.0 - x) * (1.0 - x) / 3.0;
    }
    throw std::invalid_argument("boxlab: unknown boundary case");
}

struct IdentitySpec {
    BoundaryCase c;
    bool alternating;
};

IdentitySpec identity_spec(const std::string& id) {
    if (id == "q1") return {BoundaryCase::dirichlet_dirichlet, false};
    if (id == "q2") return {BoundaryCase::neumann_dirichlet, false};
    if (id == "q3") return {BoundaryCase::dirichlet_neumann, false};
    if (id == "q4") return {BoundaryCase::neumann_neumann, false};
    if (id == "q5") return {BoundaryCase::dirichlet_dirichlet, true};
    if (id == "q6") return {BoundaryCase::neumann_dirichlet, true};
    if (id == "q7") return {BoundaryCase::dirichlet_neumann, true};
    if (id == "q8") return {BoundaryCase::neumann_neumann, true};
    throw std::invalid_argument("identity_check: id must be one of q1..q8");
}

void push_interior(std::vector<double>& hints, double z) {
    if (z > 1e-12 && z < 1.0 - 1e-12) hints.push_back(z);
}

}  // namespace

double gamma_j(BoundaryCase c, int j) {
    if (j < 1) throw std::invalid_argument("gamma_j: index is 1-based");
    const int i = case_index(c);
    return (i == 1 || i == 4) ? j * kPi : (j - 0.5) * kPi;
}

double eigenfunction(BoundaryCase c, int j, double x) {
    const double g = gamma_j(c, j);
    const int i = case_index(c);
    return (i == 1 || i == 3) ? kSqrt2 * std::sin(g * x) : kSqrt2 * std::cos(g * x);
}

std::shared_ptr<spectral::Spectrum> make_spectrum(BoundaryCase c, int truncation) {
    auto s = std::make_shared<spectral::Spectrum>();
    s->a = 0.0;
    s->b = 1.0;
    s->gammas.resize(truncation);
    for (int j = 1; j <= truncation; ++j) s->gammas[j - 1] = gamma_j(c, j);
    s->psi = [c](int j, double x) { return eigenfunction(c, j, x); };
    return s;
}

double closed_form_g(BoundaryCase c, int k, double x, double xp) {
    require_unit_square(x, xp);
    switch (k) {
        case -1:
            if (std::abs(x - xp) < 1e-14)
                throw SingularPoint("closed_form_g: k=-1 form is singular at x = x'");
            return g_m1_raw(c, x, xp);
        case -2:
            return g_m2(c, x, xp);
        case -4:
            if (std::abs(x - xp) > 1e-12)
                throw std::invalid_argument("closed_form_g: k=-4 is available on the diagonal only");
            return g_m4_diag(c, x);
        default:
            throw std::invalid_argument("closed_form_g: k must be -1, -2 or -4");
    }
}

double greens(BoundaryCase c, double x, double xp) {
    require_unit_square(x, xp);
    return -g_m2(c, x, xp);
}

double alternating_f1(BoundaryCase c, double x, double xp) {
    require_unit_square(x, xp);
    const int i = case_index(c);
    if (i == 1 || i == 4) {
        if (std::abs(x + xp - 1.0) < 1e-14 || std::abs(std::abs(x - xp) - 1.0) < 1e-14)
            throw SingularPoint("alternating_f1: log form singular where a cosine vanishes");
    }
    return f_m1_raw(c, x, xp);
}

std::vector<std::pair<double, double>> interior_grid(int m) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(m) * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            pts.emplace_back(i / (m + 1.0), j / (m + 1.0));
    return pts;
}

IdentityReport identity_check(const std::string& id,
                              const std::vector<std::pair<double, double>>& grid, double tol) {
    const IdentitySpec spec = identity_spec(id);
    IdentityReport report;
    report.id = id;
    const double quad_tol = std::min(1e-9, tol / 20.0);
    for (const auto& [x, xp] : grid) {
        auto integrand = [&, x = x, xp = xp](double z) {
            return spec.alternating ? f_m1_raw(spec.c, x, z) * f_m1_raw(spec.c, z, xp)
                                    : g_m1_raw(spec.c, x, z) * g_m1_raw(spec.c, z, xp);
        };
        std::vector<double> hints;
        if (spec.alternating) {
            push_interior(hints, 1.0 - x);
            push_interior(hints, 1.0 - xp);
        } else {
            push_interior(hints, x);
            push_interior(hints, xp);
        }
        const double lhs =
            quadrature::integrate_finite(quadrature::Integrand(integrand, hints), 0.0, 1.0,
                                         quad_tol, 600000)
                .value;
        if (!std::isfinite(lhs))
            throw std::runtime_error("identity_check: non-finite left-hand quadrature");
        const double rhs = g_m2(spec.c, x, xp);
        report.residuals.push_back(std::abs(lhs - rhs));
        report.max_residual = std::max(report.max_residual, report.residuals.back());
    }
    return report;
}

double case4_weak_check(const std::function<double(double)>& phi,
                        const std::function<double(double)>& phi_dd) {
    const double mean =
        quadrature::integrate_finite(quadrature::Integrand(phi), 0.0, 1.0, 1e-12).value;
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double x = i / 10.0;
        auto integrand = [&](double z) {
            return greens(BoundaryCase::neumann_neumann, x, z) * phi_dd(z);
        };
        const double lhs = quadrature::integrate_finite(
                               quadrature::Integrand(integrand, {x}), 0.0, 1.0, 1e-11)
                               .value;
        const double rhs = phi(x) - mean;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace greensum::boxlab
