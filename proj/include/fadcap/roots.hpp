#pragma once

#include <functional>

namespace fadcap {

// Finds a root of f in [lo, hi] given f(lo) * f(hi) <= 0, using bisection with
// secant acceleration. Returns a point x with bracket width
// <= tol * max(1, |x|). Throws std::invalid_argument ("bracket error") when
// the endpoints do not bracket a sign change.
double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol = 1e-12);

}  // namespace fadcap
