#ifndef GREENSUM_POWERLAW_HPP
#define GREENSUM_POWERLAW_HPP

#include <vector>

namespace greensum::powerlaw {

// Confining potential U = |x|^alpha with index nu = 1/(alpha + 2) in (0, 1/2).
// The zero-energy Schrodinger solutions are Bessel functions of the variable
// z = 2 nu x^{1/(2 nu)}.
struct PowerLawPotential {
    double alpha;
    double nu;
    explicit PowerLawPotential(double alpha);
    double z(double x) const;  // requires x > 0
    double operator()(double x) const;
};

// sqrt(x) K_nu(z), sqrt(x) I_{+nu}(z), sqrt(x) I_{-nu}(z); x > 0.
struct ZeroEnergySolutions {
    double psi1;
    double psi2_plus;
    double psi2_minus;
};
ZeroEnergySolutions zero_energy_solutions(const PowerLawPotential& p, double x);

// Zero-energy Green's functions, even sector (vanishing derivative at 0) and
// odd sector (vanishing value at 0):
//   G(x, x') = -2 nu sqrt(x x') I_{-nu or +nu}(z_<) K_nu(z_>).
// Evaluated through scaled Bessel products, so no overflow at large z.
double greens_even(const PowerLawPotential& p, double x, double xp);
double greens_odd(const PowerLawPotential& p, double x, double xp);

// First-order sum rules in Gamma form. sum_even/sum_odd need nu in (0, 1/4)
// (alpha > 2); sum_alternating needs nu in (0, 1/2).
double sum_even(double nu);
double sum_odd(double nu);
double sum_alternating(double nu);

// Quadrature routes for the same sums: finite part in x plus the asymptotic
// Bessel-product tail in z.
double sum_even_by_quadrature(double nu, double tol = 1e-10);
double sum_odd_by_quadrature(double nu, double tol = 1e-10);
double sum_alternating_by_quadrature(double nu, double tol = 1e-9);

// Nested representation of the even sum through the partner Green's function,
//   -int_0^inf G'(x,x) dx = int_0^inf dx / Psi^2(x) int_0^x Psi^2(y) dy,
// Psi = sqrt(x) I_{-nu}(z).  sign = +1 runs the odd-seed analogue.
double partner_diag_sum_by_quadrature(double nu, int sign = -1, double tol = 1e-8);

// SUSY partner with an extra bound state at E = 0:
//   U'(x) = |x|^alpha (-1 + 2 [I_{1-nu}(z)/I_{-nu}(z)]^2),  z at |x|,
// and its unnormalized ground state 1/Psi(|x|).
double partner_potential(const PowerLawPotential& p, double x);
double partner_ground_state(const PowerLawPotential& p, double x);

// G'(x, x') = -(1/(Psi(x) Psi(x'))) int_0^{x_<} Psi^2(y) dy ; x, x' > 0.
double partner_greens(const PowerLawPotential& p, double x, double xp);

// int_0^inf z^{4nu-1} I_{sign nu}(z) K_nu(z) dz versus its Gamma closed form,
// plus the nested double-integral representation. Requires nu in (0, 1/4).
struct BesselIdentityReport {
    double nu;
    int sign;
    double lhs_quadrature;
    double rhs_gamma;
    double nested_double;
    double residual;
    double nested_residual;
};
BesselIdentityReport bessel_identity(double nu, int sign);

// Bohr-Sommerfeld eigenvalue, exact for alpha = 2:
//   E_n = ([n + 1/2] sqrt(pi) (alpha+2) Gamma((alpha+2)/(2 alpha)) /
//          (2 Gamma(1/alpha)))^{2 alpha/(alpha+2)}.
double wkb_eigenvalue(const PowerLawPotential& p, int n);

// Shooting sums with a WKB tail (Hurwitz-zeta summed) past the computed
// states.
struct EigenSumReport {
    double even_sum;
    double odd_sum;
    double alternating_sum;
    double tail_even;
    double tail_odd;
    int states_per_parity;
};
EigenSumReport eigenvalue_sums(double alpha, int states_per_parity = 40);

// Figure table: x, |x|^n, U'(x), 1/Psi(|x|). n in {2, 4, 6, 8}; mirrored
// evaluation keeps the even symmetry exact.
struct FigureRow {
    double x;
    double potential;
    double partner;
    double ground_state;
};
std::vector<FigureRow> figure_data(int n, double lo = -2.0, double hi = 2.0, int samples = 801);

}  // namespace greensum::powerlaw

#endif
