#ifndef GREENSUM_BOXLAB_HPP
#define GREENSUM_BOXLAB_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "greensum/spectral.hpp"

namespace greensum::boxlab {

// Free particle on [0, 1], the four wall combinations:
//   case 1  psi(0)=0,  psi(1)=0   -> sqrt2 sin(j pi x),        gamma_j = j pi
//   case 2  psi'(0)=0, psi(1)=0   -> sqrt2 cos((j-1/2) pi x),  gamma_j = (j-1/2) pi
//   case 3  psi(0)=0,  psi'(1)=0  -> sqrt2 sin((j-1/2) pi x),  gamma_j = (j-1/2) pi
//   case 4  psi'(0)=0, psi'(1)=0  -> sqrt2 cos(j pi x),        gamma_j = j pi
enum class BoundaryCase {
    dirichlet_dirichlet = 1,
    neumann_dirichlet = 2,
    dirichlet_neumann = 3,
    neumann_neumann = 4,
};

class SingularPoint : public std::runtime_error {
  public:
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

double gamma_j(BoundaryCase c, int j);
double eigenfunction(BoundaryCase c, int j, double x);
std::shared_ptr<spectral::Spectrum> make_spectrum(BoundaryCase c, int truncation);

// Closed forms of g_k for k in {-1, -2, -4}; k = -4 on the diagonal only.
// The k = -1 log forms are singular on x = x' (SingularPoint).
double closed_form_g(BoundaryCase c, int k, double x, double xp);

// Green's function G = -g_{-2}. For case 4 this inverts d2/dx2 onto the
// zero-mean subspace: (d2/dx2) G = delta(x - x') - 1.
double greens(BoundaryCase c, double x, double xp);

// Alternating-sign closed forms f_{-1}. Step-function cases 2 and 3 take the
// value 1 on the boundary line x + x' = 1.
double alternating_f1(BoundaryCase c, double x, double xp);

// Convolution identities q1..q8: left side by quadrature of the closed-form
// kernels, right side in closed form.
struct IdentityReport {
    std::string id;
    double max_residual = 0.0;
    std::vector<double> residuals;
};
IdentityReport identity_check(const std::string& id,
                              const std::vector<std::pair<double, double>>& grid, double tol);

// Interior m x m grid at ((i+1)/(m+1), (j+1)/(m+1)).
std::vector<std::pair<double, double>> interior_grid(int m);

// Weak form of the case-4 equation: for phi with phi'(0) = phi'(1) = 0,
//   int_0^1 G(x, x') phi''(x') dx' = phi(x) - int_0^1 phi.
// Returns the largest residual over sampled x.
double case4_weak_check(const std::function<double(double)>& phi,
                        const std::function<double(double)>& phi_dd);

}  // namespace greensum::boxlab

#endif
