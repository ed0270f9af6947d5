#ifndef GREENSUM_QUADRATURE_HPP
#define GREENSUM_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace greensum::quadrature {

// Integrand with optional singularity hints. The adaptive driver pre-splits
// the interval at every in-range hint, so integrable endpoint and interior
// singularities (logs, weak power laws) never land on an evaluation node.
struct Integrand {
    std::function<double(double)> f;
    std::vector<double> singularities{};

    Integrand(std::function<double(double)> fn) : f(std::move(fn)) {}
    Integrand(std::function<double(double)> fn, std::vector<double> hints)
        : f(std::move(fn)), singularities(std::move(hints)) {}
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Returns once the summed error
// estimate drops below tol; throws QuadratureError when the evaluation
// budget runs out first.
QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  long max_evaluations = 2000000);

// [a, inf) through the rational map x = a + t/(1-t). The integrand must decay
// at least like 1/x^2.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a, double tol,
                                         long max_evaluations = 4000000);

// For the separable kernel F(x,x') = f(x_<) g(x_>),
//   int_a^b int_a^b F dx dx' = 2 int_a^b g(x) [int_a^x f] dx.
// Evaluates the right-hand side by nested quadrature.
double separable_double_integral(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g, double a, double b,
                                 double tol);

}  // namespace greensum::quadrature

#endif
