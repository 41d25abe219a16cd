#include "fadcap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fadcap {

double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("bracket error: lo >= hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bracket error: no sign change in [lo, hi]");
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, std::fabs(mid))) return mid;

    // Secant candidate clamped to the interior; fall back to bisection when
    // it degenerates or leaves the bracket.
    double cand = mid;
    const double denom = fhi - flo;
    if (denom != 0.0) {
      const double sec = lo - flo * (hi - lo) / denom;
      if (sec > lo + 0.1 * (hi - lo) && sec < hi - 0.1 * (hi - lo)) {
        cand = sec;
      }
    }
    const double fc = f(cand);
    if (fc == 0.0) return cand;
    if ((fc > 0.0) == (flo > 0.0)) {
      lo = cand;
      flo = fc;
    } else {
      hi = cand;
      fhi = fc;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fadcap
