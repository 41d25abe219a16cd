#include "fadcap/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fadcap {

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("ln_gamma: requires x > 0");
  }
  int sign = 1;
  return lgamma_r(x, &sign);
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("digamma: requires x > 0");
  }
  double result = 0.0;
  while (x < 8.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series with Bernoulli-number coefficients.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv;
  double p = inv2;
  series -= p / 12.0;
  p *= inv2;
  series += p / 120.0;
  p *= inv2;
  series -= p / 252.0;
  p *= inv2;
  series += p / 240.0;
  p *= inv2;
  series -= p / 132.0;
  p *= inv2;
  series += p * 691.0 / 32760.0;
  return result + series;
}

double exp_integral_e1(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("exp_integral_e1: requires x > 0");
  }
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -x / static_cast<double>(k);
      const double add = -term / static_cast<double>(k);
      sum += add;
      if (std::fabs(add) < 1e-18 * std::fabs(sum) + 1e-300) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Continued fraction E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
  // evaluated by the modified Lentz algorithm.
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k <= 200; ++k) {
    const double a = -static_cast<double>(k) * static_cast<double>(k);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x) * h;
}

double upper_incomplete_gamma(int n, double x) {
  if (n < 0) throw std::domain_error("upper_incomplete_gamma: requires n >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("upper_incomplete_gamma: requires x > 0");
  }
  if (n == 0) return exp_integral_e1(x);
  // Gamma(n, x) = (n-1)! e^-x sum_{k=0}^{n-1} x^k / k!
  double sum = 0.0;
  double term = 1.0;  // x^k / k!
  for (int k = 0; k < n; ++k) {
    sum += term;
    term *= x / static_cast<double>(k + 1);
  }
  double fact = 1.0;
  for (int k = 2; k < n; ++k) fact *= static_cast<double>(k);
  return fact * std::exp(-x) * sum;
}

namespace {

// Ascending series I_nu(x) = sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)),
// returned unscaled. Valid for small/moderate x.
double bessel_i_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - ln_gamma(nu + 1.0));
  double sum = term;
  for (int k = 0; k < 200; ++k) {
    term *= q / ((k + 1.0) * (nu + k + 1.0));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

double bessel_i_half(int order_num, double x) {
  if (order_num < 0) throw std::domain_error("bessel_i_half: order < 0");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_i_half: requires finite x >= 0");
  }
  const double nu = order_num + 0.5;
  if (x == 0.0) return 0.0;
  // The exponential finite sum cancels catastrophically for small x, and the
  // loss deepens with the order; the all-positive ascending series is exact
  // to double precision up to moderate arguments, so prefer it there.
  if (x < 15.0) return bessel_i_series(nu, x);

  // Finite exponential sum for half-integer order:
  // I_{n+1/2}(x) = [e^x S(-) + (-1)^{n+1} e^-x S(+)] / sqrt(2 pi x)
  // with S(s) = sum_{k=0}^{n} (s)^k (n+k)! / (k! (n-k)! (2x)^k).
  const int n = order_num;
  double coeff = 1.0;  // (n+k)! / (k! (n-k)!) at k = 0
  double sm = 0.0, sp = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = coeff / std::pow(2.0 * x, k);
    sm += (k % 2 == 0) ? t : -t;
    sp += t;
    // advance (n+k)!/(k!(n-k)!) -> multiply by (n+k+1)(n-k)/(k+1)
    coeff *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
             static_cast<double>(k + 1);
  }
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return (std::exp(x) * sm + sign * std::exp(-x) * sp) /
         std::sqrt(2.0 * M_PI * x);
}

double log_bessel_i_scaled(double nu, double x) {
  if (!(nu >= 0.0)) throw std::domain_error("log_bessel_i_scaled: nu < 0");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_bessel_i_scaled: requires x > 0");
  }
  if (x < 30.0) {
    return std::log(bessel_i_series(nu, x)) - x;
  }
  // Large-argument expansion of the scaled function:
  // I_nu(x) e^-x ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu) / x^k with
  // a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k 8). Terminates exactly for
  // half-integer nu; truncated at the smallest term otherwise.
  const double fournu2 = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double prev = std::fabs(term);
  for (int k = 1; k <= 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(fournu2 - odd * odd) / (8.0 * k * x);
    if (term == 0.0) break;
    if (std::fabs(term) > prev) break;  // divergent tail; stop at minimum
    sum += term;
    prev = std::fabs(term);
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return -0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

std::vector<double> delta_seq(int x, double y) {
  if (x < 1) throw std::domain_error("delta_seq: requires x >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(x));
  for (int k = 0; k < x; ++k) {
    out.push_back((y + static_cast<double>(k)) / static_cast<double>(x));
  }
  return out;
}

}  // namespace fadcap
