#pragma once

#include <vector>

namespace fadcap {

// Euler-Mascheroni constant (psi(1) = -kEulerGamma).
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

// Digamma psi(x) for x > 0, accurate to ~1e-12.
double digamma(double x);

// Exponential integral E1(x) = int_x^inf e^-t / t dt for x > 0.
double exp_integral_e1(double x);

// Upper incomplete gamma Gamma(n, x) at integer order n >= 0, x > 0.
// n >= 1 uses the finite sum (n-1)! e^-x sum_{k<n} x^k/k!; n = 0 is E1(x).
double upper_incomplete_gamma(int n, double x);

// Modified Bessel I_{n+1/2}(x) for integer n >= 0 and x >= 0, evaluated by
// the finite exponential sum, with an ascending-series fallback below
// |x| = 1e-3 where the exponential sum cancels catastrophically.
double bessel_i_half(int order_num, double x);

// ln(I_nu(x)) - x for real nu >= 0 and x > 0 (exponentially scaled Bessel in
// log form; safe for arguments far beyond the overflow range of I_nu itself).
double log_bessel_i_scaled(double nu, double x);

// The sequence Delta(x, y) = y/x, (y+1)/x, ..., (y+x-1)/x.
std::vector<double> delta_seq(int x, double y);

}  // namespace fadcap
