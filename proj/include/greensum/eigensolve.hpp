#ifndef GREENSUM_EIGENSOLVE_HPP
#define GREENSUM_EIGENSOLVE_HPP

#include <functional>
#include <vector>

namespace greensum::eigensolve {

enum class Bc { dirichlet, neumann };
enum class Parity { even, odd };

// Schrodinger problem psi'' = (U - E) psi on [a, b] with endpoint conditions
// psi = 0 (dirichlet) or psi' = 0 (neumann). Half-line parity problems map to
// [0, x_max]: even -> neumann at 0, odd -> dirichlet at 0; decay at x_max is
// imposed as a dirichlet wall, so x_max must keep U(x_max) - E comfortably
// positive (>= 20 for 1e-8 eigenvalues) for bound-state work.
struct EigenProblem {
    std::function<double(double)> U;
    double a = 0.0;
    double b = 1.0;
    Bc left = Bc::dirichlet;
    Bc right = Bc::dirichlet;
    double h = 1e-3;
};

EigenProblem half_line(std::function<double(double)> U, Parity parity, double x_max,
                       double h = 1e-3);

struct EigenState {
    double energy;
    int nodes;
};

class ShootingSolver {
  public:
    explicit ShootingSolver(EigenProblem prob);

    // Lowest `count` eigenvalues by Numerov integration, node-count
    // bracketing and endpoint-condition bisection. Throws std::runtime_error
    // if a bracket cannot be established.
    std::vector<EigenState> solve(int count);

    struct Wavefunction {
        std::vector<double> x;
        std::vector<double> psi;  // unit L2 norm on [a, b]
        double energy = 0.0;
        int nodes = 0;
        double operator()(double xq) const;  // cubic interpolation
    };
    Wavefunction eigenfunction(int index);

    // <psi, (-d2/dx2 + U) psi> with 4th-order grid differences.
    double rayleigh_quotient(const Wavefunction& w) const;

  private:
    struct Shot {
        int nodes;
        double end_value;  // psi(b) or psi'(b) depending on the right BC
    };
    Shot shoot(double energy, std::vector<double>* keep = nullptr) const;
    double node_transition(int k);  // smallest E with more than k nodes
    double bracketed_eigenvalue(int k);

    EigenProblem prob_;
    int n_ = 0;
    double e_floor_ = 0.0;
    std::vector<double> xs_, pot_;
    std::vector<EigenState> cache_;
    std::vector<double> transition_cache_;
};

std::vector<EigenState> solve_spectrum(const EigenProblem& prob, int count);

}  // namespace greensum::eigensolve

#endif
