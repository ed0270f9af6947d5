#ifndef GREENSUM_REFLECTIONLESS_HPP
#define GREENSUM_REFLECTIONLESS_HPP

namespace greensum::reflectionless {

// Single-soliton reflectionless potential U = -2 alpha^2 sech^2(alpha x),
// one bound state psi_0 = sqrt(alpha/2) sech(alpha x) at E = -alpha^2.
double soliton_potential(double alpha, double x);
double bound_state(double alpha, double x);

// Lax-hierarchy diagonal L_k = -2 (2 alpha)^{2k+1} psi_0^2(x), k >= 0.
double lax_diag(int k, double alpha, double x);

// Line integral of L_k, truncated at |x| = 30/alpha, with the exponential
// tail bound of the discarded part.
struct LineIntegral {
    double value;
    double tail_bound;
};
LineIntegral lax_integral(int k, double alpha, double tol = 1e-11);

// Residual of d/dx L_{k+1} = [d3/dx3 - 4U d/dx - 2U'] L_k at x, central
// differences with one Richardson halving (base step h). The default step
// balances the h^4 truncation remainder against the 1/h^3 rounding noise of
// the third-derivative stencil.
double lax_recursion_residual(int k, double alpha, double x, double h = 2e-3);

}  // namespace greensum::reflectionless

#endif
