// beurling-lab: the kernel G(z) = 1 - (e^{-z} - e^{-2z})/z, its logarithmic
// derivative, its zeros, and the density g with -log G(z) = integral of
// g(u) u^{-z-1} over [1, inf).
//
// g comes from expanding -log G = sum_j phi^j / j with phi the Laplace
// transform of 1_[1,2]; in the variable w = log u this makes g(e^w) a sum
// of Irwin-Hall-type convolution powers, piecewise polynomial on unit
// intervals. Piece coefficients are kept as exact rationals because the
// alternating expansion loses ~2.5 bits per degree.

#ifndef BEURLING_GFUN_HPP
#define BEURLING_GFUN_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <vector>

#include "beurling/mpreal.hpp"

namespace beurling::gfun {

using Rational = boost::multiprecision::cpp_rational;

std::complex<double> G_eval(std::complex<double> z);
std::complex<double> G_logderiv(std::complex<double> z); // G'(z)/G(z)

// Monomial coefficients (in w) of g(e^w) on [m, m+1); exact.
const std::vector<Rational>& g_polynomial_w(int m);

// Same piece with the j-sum truncated at `depth`; used by g_density.
std::vector<Rational> g_polynomial_w_depth(int m, int depth);

// g(u) for u >= 1, evaluating the exact piece at 53+pad bits internally.
double g_density(double u, int depth = 256);

// Derivative of w -> g(e^w) w at a non-knot point (analytic per piece).
double g_logweight_derivative(double w);

// Real-coefficient copy of a piece at the requested precision.
std::vector<Real> g_polynomial_real(int m, mpfr_prec_t prec);

// Upper-half-plane zeros of G, Newton-refined to |G| <= 1e-12, for
// j = 1..j_max; seeds follow -log(pi j)/2 + i pi (j + 1/4).
std::vector<std::complex<double>> G_zeros(int j_max);

} // namespace beurling::gfun

#endif
