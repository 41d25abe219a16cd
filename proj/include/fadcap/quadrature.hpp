#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace fadcap {

// Result of a numerical integration: the value, an estimate of the absolute
// error, and how many integrand evaluations were spent.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Thrown when the adaptive subdivision runs out of budget. Carries the best
// estimate obtained so far so callers can decide whether it is usable.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}

  QuadratureResult best_estimate;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_floor = 1e-12;
  std::size_t max_segments = 8000;
};

// Globally adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
// Throws std::domain_error if the integrand produces a non-finite value and
// QuadratureError if the error target cannot be met within the segment budget.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

// Integrates f over [lower, inf) using the rational substitution
// x = lower + t/(1-t), which maps the half line onto [0, 1) and copes with
// integrands decaying like exp(-c x^(alpha/2)) for any alpha > 0.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lower, double rel_tol = 1e-10);

}  // namespace fadcap
