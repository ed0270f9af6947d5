#ifndef GREENSUM_SPECFUN_HPP
#define GREENSUM_SPECFUN_HPP

// Self-contained special functions: Gamma, modified Bessel I/K of real
// fractional order, spherical Bessel j1, Dawson integral, erfc. All double
// precision, pure and reentrant.

namespace greensum::specfun {

// Gamma function. Throws std::domain_error at non-positive integers and
// std::overflow_error once the result exceeds the double range (x > ~171.6).
// Accurate to ~1e-13 relative on [-10, 30].
double gamma(double x);

// Modified Bessel functions of real order. Require x > 0; intended for
// |nu| <= 2 (usable somewhat beyond). Ten or more significant digits on
// (0, 50] for the unscaled forms.
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

// Exponentially scaled variants: e^{-x} I_nu(x) and e^{x} K_nu(x). These stay
// representable for large arguments where I overflows and K underflows.
double bessel_i_scaled(double nu, double x);
double bessel_k_scaled(double nu, double x);

// Spherical Bessel function j1(x) = sin(x)/x^2 - cos(x)/x, with a series
// branch below |x| = 0.1 to avoid cancellation. j1(0) = 0.
double spherical_j1(double x);

// Dawson integral F(x) = exp(-x^2) int_0^x exp(t^2) dt.
double dawson(double x);

// Complementary error function and its scaled form erfcx(x) = e^{x^2} erfc(x).
double erfc(double x);
double erfcx(double x);

}  // namespace greensum::specfun

#endif
