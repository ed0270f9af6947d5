#ifndef GREENSUM_SUSY_HPP
#define GREENSUM_SUSY_HPP

#include <functional>

namespace greensum::susy {

// Interval of definition; b may be +infinity for half-line problems.
struct Domain {
    double a;
    double b;
    bool semi_infinite() const;
};

// Nodeless solution psi of psi'' = (U - epsilon) psi at an energy epsilon
// below the ground state, anchored to the boundary condition at x = a. The
// derivative is supplied analytically so downstream quantities avoid
// differencing noise.
struct SeedSolution {
    double epsilon;
    std::function<double(double)> psi;
    std::function<double(double)> dpsi;
    Domain domain;
};

// Sign sampling on a uniform grid.
bool is_nodeless(const SeedSolution& seed, int samples = 1000);

// Whether 1/psi is square integrable on the domain (quadrature with endpoint
// divergence detection). Decides if the partner spectrum gains epsilon.
bool partner_ground_normalizable(const SeedSolution& seed);

// |psi''/psi - U + epsilon| at x by central differences.
double seed_equation_residual(const SeedSolution& seed, const std::function<double(double)>& U,
                              double x);

// SUSY pair U' = U - 2 (ln psi)'' built through (ln psi)'' = U - eps - (psi'/psi)^2.
struct SusyPair {
    std::function<double(double)> U;
    SeedSolution seed;
    std::function<double(double)> partner_U;
    bool partner_normalizable;
};
SusyPair make_pair(std::function<double(double)> U, SeedSolution seed);

// Two-solution Green's function at energy epsilon,
//   G(x, x') = psi(x_<) psi(x_>) int_b^{x_>} dz / psi(z)^2,
// the companion satisfying the b-side condition. Throws std::runtime_error
// when the psi^-2 integral diverges.
double greens_two_solution(const SeedSolution& seed, double x, double xp);

// Partner Green's function from phi' = 1/psi:
//   G'(x, x') = -(1/(psi(x) psi(x'))) int_a^{x_<} psi(y)^2 dy.
double partner_greens(const SeedSolution& seed, double x, double xp);

// Second-order sum rule, both one-dimensional routes:
//   sum_j (eps - gamma_j^2)^{-2} = -2 int G^2 G' dx = -2 int G'^2 G dx.
struct SecondOrderSum {
    double via_base;     // -2 int G^2 G'
    double via_partner;  // -2 int G'^2 G
};
SecondOrderSum second_order_sum(const std::function<double(double)>& greens_diag,
                                const std::function<double(double)>& partner_diag, Domain domain,
                                double tol = 1e-9);

// Partner eigenfunction (gamma^2 - eps)^{-1/2} [psi_j' - (ln psi)' psi_j].
// Throws std::invalid_argument when gamma_j^2 equals the seed energy.
std::function<double(double)> partner_eigenfunction(std::function<double(double)> psi_j,
                                                    std::function<double(double)> dpsi_j,
                                                    double gamma_j, const SeedSolution& seed);

// Oscillator example (U = x^2, even sector, seed exp(x^2/2) at epsilon = -1):
// S2 computed from the dawson/erfc closed forms of the two Green's function
// diagonals and compared with pi^2/32.
struct OscillatorReport {
    double ss1;  // -2 int G^2 G'
    double ss2;  // -2 int G'^2 G
    double ss3;  // pi^2/32
    double max_residual;
};
OscillatorReport oscillator_suite(double tol = 1e-9);

}  // namespace greensum::susy

#endif
