#include "fadcap/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace fadcap {

MonteCarloEstimate mc_estimate(const std::function<double(Rng&)>& draw,
                               const std::function<double(double)>& statistic,
                               std::size_t n, std::uint64_t seed) {
  if (n < 100) throw std::invalid_argument("mc_estimate: n must be >= 100");
  Rng rng(seed);

  // Welford accumulation keeps the variance numerically stable.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = statistic(draw(rng));
    if (!std::isfinite(x)) {
      throw std::domain_error("mc_estimate: statistic produced non-finite value");
    }
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return MonteCarloEstimate{mean, std::sqrt(var / static_cast<double>(n)), n,
                            seed};
}

}  // namespace fadcap
