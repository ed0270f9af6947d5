#ifndef GREENSUM_SPECTRAL_HPP
#define GREENSUM_SPECTRAL_HPP

#include <array>
#include <functional>
#include <memory>
#include <vector>

namespace greensum::spectral {

// Discrete spectrum on [a, b]: gamma_j > 0 strictly increasing (eigenvalue is
// gamma_j^2), eigenfunction evaluator psi(j, x) with 1-based j.
struct Spectrum {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> gammas;
    std::function<double(int, double)> psi;
    std::vector<int> parity{};  // optional, +1 even / -1 odd per state
};

// Largest orthonormality defect max_{j,k<=count} |<psi_j, psi_k> - delta_jk|,
// by quadrature.
double orthonormality_defect(const Spectrum& s, int count, double tol = 1e-10);

enum class SignMode { uniform, alternating };

// Truncated bilinear sum  sum_{j<=J} s_j gamma_j^k psi_j(x) psi_j(x'),
// s_j = 1 or (-1)^{j-1}.
struct KernelSeries {
    std::shared_ptr<const Spectrum> spectrum;
    int k = -2;
    SignMode sign = SignMode::uniform;
    int truncation = 10000;

    KernelSeries(std::shared_ptr<const Spectrum> s, int k, SignMode sign, int truncation);
};

double g_k_eval(const KernelSeries& series, double x, double xp);

// Partial sum plus a tail estimate from comparing the J and J/2 truncations.
struct SeriesValue {
    double value;
    double tail_estimate;
};
SeriesValue g_k_eval_with_tail(const KernelSeries& series, double x, double xp);

// Generic symmetric kernel k(x, x') and a locator for its singular z-points
// when convolving at fixed (x, x').
using Kernel2D = std::function<double(double, double)>;
using SingularityMap = std::function<std::vector<double>(double, double)>;

// Composition (left * right)(x, x') = int_a^b left(x, z) right(z, x') dz by
// quadrature. For orthonormal spectra this realizes g_{k+n} from g_k and g_n
// (and from alternating pairs f_k, f_n).
Kernel2D convolve(Kernel2D left, Kernel2D right, double a, double b, double tol,
                  SingularityMap hints = {});
Kernel2D convolve(const KernelSeries& left, const KernelSeries& right, double tol);

// Diagonal recursion upward in k:
//   g_{k+2}(x,x) = 1/4 { [(-d2/dx2 + 4U) g_k]_a^x - 2 int_a^x U'(y) g_k(y,y) dy }.
// Derivatives by central differences (h = 1e-4, one halving for the noise
// estimate); throws std::runtime_error when differentiation noise dominates.
std::function<double(double)> recur_up(std::function<double(double)> diag,
                                       std::function<double(double)> U, double a);

// Boundary data for the downward recursion: value, first and second
// derivative of the target diagonal at the anchor endpoint. One entry may be
// marked unknown, to be fixed by a value or derivative condition at the far
// end (the unknown enters affinely, so a scalar solve suffices).
struct EndpointData {
    double anchor = 0.0;
    std::array<double, 3> g{0.0, 0.0, 0.0};
    int unknown = -1;  // index into g, -1 when all three are given
    enum class FarKind { none, value, derivative } far_kind = FarKind::none;
    double far_point = 0.0;
    double far_target = 0.0;
};

// Solves d3/dx3 g - 4 U g' - 2 U' g = -4 (d/dx) diag  on [lo, hi] by repeated
// integration from the anchor (Picard iteration on the potential terms).
// Throws std::runtime_error for an unsatisfiable far-end condition.
std::function<double(double)> recur_down(std::function<double(double)> diag,
                                         std::function<double(double)> U,
                                         const EndpointData& boundary, double lo, double hi);

// Sum rule  int_a^b diag(x) dx = sum_j gamma_j^k.
double sum_rule(const std::function<double(double)>& diag, double a, double b,
                double tol = 1e-10);

}  // namespace greensum::spectral

#endif
