#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace fadcap {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Deterministic random source. Normal deviates are produced by an explicit
// Box-Muller transform (rather than std::normal_distribution) so the byte
// stream depends only on the seed, not on the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in (0, 1).
  double uniform() {
    for (;;) {
      const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  // Standard normal deviate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Sample mean of statistic(draw(rng)) over n draws. Fully deterministic for a
// fixed seed; the RNG state is confined to the call.
MonteCarloEstimate mc_estimate(const std::function<double(Rng&)>& draw,
                               const std::function<double(double)>& statistic,
                               std::size_t n, std::uint64_t seed);

}  // namespace fadcap
