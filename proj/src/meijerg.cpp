#include "fadcap/meijerg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fadcap/specfun.hpp"

namespace fadcap {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos approximation (g = 7, 9 terms).
constexpr double kLanczos[9] = {0.99999999999980993,
                                676.5203681218851,
                                -1259.1392167224028,
                                771.32342877765313,
                                -176.61502916214059,
                                12.507343278686905,
                                -0.13857109526572012,
                                9.9843695780195716e-6,
                                1.5056327351493116e-7};

bool near(double x, double y) { return std::fabs(x - y) <= 1e-9; }

}  // namespace

std::complex<double> ln_gamma_complex(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Reflection; any 2 pi i branch offset is harmless because results are
    // only ever exponentiated.
    return std::log(kPi) - std::log(std::sin(kPi * z)) -
           ln_gamma_complex(1.0 - z);
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

MeijerGSpec make_exp_spec() { return MeijerGSpec{1, 0, 0, 1, {}, {0.0}}; }

MeijerGSpec make_log_spec() {
  return MeijerGSpec{1, 2, 2, 2, {1.0, 1.0}, {1.0, 0.0}};
}

MeijerGSpec make_capacity_spec(int alpha, double beta) {
  if (alpha < 1) {
    throw std::invalid_argument("make_capacity_spec: requires integer alpha >= 1");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("make_capacity_spec: requires beta > 0");
  }
  const double y = -beta;
  MeijerGSpec spec;
  spec.p = 2 * alpha;
  spec.q = 2 * alpha + 2;
  spec.m = alpha + 2;
  spec.n = 2 * alpha;
  const auto upper = delta_seq(alpha, 1.0 + y);
  const auto lower = delta_seq(alpha, y);
  spec.a_params = upper;
  spec.a_params.insert(spec.a_params.end(), upper.begin(), upper.end());
  spec.b_params = {0.0, 0.5};
  spec.b_params.insert(spec.b_params.end(), upper.begin(), upper.end());
  spec.b_params.insert(spec.b_params.end(), lower.begin(), lower.end());
  return spec;
}

double capacity_spec_prefactor(int alpha) {
  return 2.0 * std::sqrt(kPi) /
         (alpha * std::pow(2.0, alpha) * std::pow(kPi, alpha));
}

GShape classify_spec(const MeijerGSpec& spec) {
  if (spec.m > spec.q || spec.n > spec.p ||
      static_cast<int>(spec.a_params.size()) != spec.p ||
      static_cast<int>(spec.b_params.size()) != spec.q) {
    throw std::invalid_argument("meijer_g: malformed spec");
  }
  if (spec.m == 1 && spec.n == 0 && spec.p == 0 && spec.q == 1 &&
      near(spec.b_params[0], 0.0)) {
    return GShape::Exponential;
  }
  if (spec.m == 1 && spec.n == 2 && spec.p == 2 && spec.q == 2 &&
      near(spec.a_params[0], 1.0) && near(spec.a_params[1], 1.0) &&
      near(spec.b_params[0], 1.0) && near(spec.b_params[1], 0.0)) {
    return GShape::Logarithm;
  }
  // Composite shape: p = 2 alpha, q = 2 alpha + 2, m = alpha + 2, n = 2 alpha.
  if (spec.p >= 2 && spec.p % 2 == 0) {
    const int alpha = spec.p / 2;
    if (spec.q == 2 * alpha + 2 && spec.m == alpha + 2 && spec.n == 2 * alpha) {
      const double y = static_cast<double>(alpha) * spec.b_params[spec.m];
      const double beta = -y;
      if (beta > 0.0) {
        const MeijerGSpec want = make_capacity_spec(alpha, beta);
        bool ok = true;
        for (int i = 0; i < spec.p && ok; ++i) {
          ok = near(spec.a_params[i], want.a_params[i]);
        }
        for (int i = 0; i < spec.q && ok; ++i) {
          ok = near(spec.b_params[i], want.b_params[i]);
        }
        if (ok) return GShape::CapacityComposite;
      }
    }
  }
  throw std::invalid_argument(
      "meijer_g: spec outside the restricted shape class");
}

namespace {

// Generic Mellin-Barnes line integral for the primitive shapes:
//   G(x) = (1/2 pi i) int_L chi(s) x^s ds,
//   chi(s) = prod_{j<m} Gamma(b_j - s) prod_{j<n} Gamma(1 - a_j + s)
//          / [prod_{j>=m} Gamma(1 - b_j + s) prod_{j>=n} Gamma(a_j - s)].
// The vertical contour sits midway between the rightmost pole of the
// Gamma(1 - a + s) family and the leftmost pole of the Gamma(b - s) family.
double mellin_barnes_line(const MeijerGSpec& spec, double x) {
  double right_min = 1e300;
  for (int j = 0; j < spec.m; ++j) {
    right_min = std::min(right_min, spec.b_params[j]);
  }
  double left_max = -1e300;
  for (int j = 0; j < spec.n; ++j) {
    left_max = std::max(left_max, spec.a_params[j] - 1.0);
  }
  double c;
  if (spec.n == 0) {
    c = right_min - 0.5;
  } else {
    if (left_max >= right_min) {
      throw std::invalid_argument(
          "meijer_g: degenerate parameters (pole collision on contour)");
    }
    c = 0.5 * (left_max + right_min);
  }

  const double lx = std::log(x);
  auto chi_xs = [&](double yim) {
    const cplx s(c, yim);
    cplx lg = 0.0;
    for (int j = 0; j < spec.m; ++j) lg += ln_gamma_complex(spec.b_params[j] - s);
    for (int j = 0; j < spec.n; ++j) {
      lg += ln_gamma_complex(1.0 - spec.a_params[j] + s);
    }
    for (int j = spec.m; j < spec.q; ++j) {
      lg -= ln_gamma_complex(1.0 - spec.b_params[j] + s);
    }
    for (int j = spec.n; j < spec.p; ++j) {
      lg -= ln_gamma_complex(spec.a_params[j] - s);
    }
    return std::exp(lg + s * lx);
  };

  const double h = 0.05;
  double accum = 0.5 * chi_xs(0.0).real();
  double scale = std::fabs(accum);
  int quiet = 0;
  for (int k = 1; k <= 20000; ++k) {
    const cplx v = chi_xs(k * h);
    accum += v.real();
    scale = std::max(scale, std::fabs(accum));
    if (std::abs(v) < 1e-17 * std::max(scale, 1e-300)) {
      if (++quiet >= 5) break;
    } else {
      quiet = 0;
    }
    if (k == 20000) {
      throw std::runtime_error(
          "meijer_g: contour truncation did not converge; best estimate " +
          std::to_string(accum * h / kPi));
    }
  }
  return accum * h / kPi;
}

}  // namespace

double capacity_log_kernel(double beta, double alpha, double s) {
  if (!(beta > 0.0 && alpha > 0.0 && s > 0.0)) {
    throw std::invalid_argument("capacity_log_kernel: requires positive args");
  }
  const double ls = std::log(s);
  auto phi = [&](double yim) {
    const cplx t(-0.5, yim);
    const cplx w = 2.0 * (beta - t) / alpha;
    const cplx lg = ln_gamma_complex(w) - w * ls;
    return kPi / (t * std::sin(kPi * t)) * (2.0 / alpha) * std::exp(lg);
  };

  const double h = 0.05;
  double accum = 0.5 * phi(0.0).real();
  double scale = std::fabs(accum);
  int quiet = 0;
  for (int k = 1; k <= 20000; ++k) {
    const cplx v = phi(k * h);
    accum += v.real();
    scale = std::max(scale, std::fabs(accum));
    if (std::abs(v) < 1e-17 * std::max(scale, 1e-300)) {
      if (++quiet >= 5) break;
    } else {
      quiet = 0;
    }
    if (k == 20000) {
      throw std::runtime_error(
          "capacity_log_kernel: contour truncation did not converge");
    }
  }
  return accum * h / kPi;
}

double meijer_g(const MeijerGSpec& spec, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("meijer_g: requires x > 0");
  }
  switch (classify_spec(spec)) {
    case GShape::Exponential:
      return std::exp(-x);
    case GShape::Logarithm:
      return std::log1p(x);
    case GShape::CapacityComposite: {
      const int alpha = spec.p / 2;
      const double beta =
          -static_cast<double>(alpha) * spec.b_params[spec.m];
      const double s = 2.0 * std::sqrt(x);
      return capacity_log_kernel(beta, alpha, s) /
             capacity_spec_prefactor(alpha);
    }
  }
  throw std::logic_error("meijer_g: unreachable");
}

double meijer_g_contour(const MeijerGSpec& spec, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("meijer_g_contour: requires x > 0");
  }
  switch (classify_spec(spec)) {
    case GShape::Exponential:
    case GShape::Logarithm:
      return mellin_barnes_line(spec, x);
    case GShape::CapacityComposite:
      // The composite's defining contour does not separate the two pole
      // families on any vertical line in the s-plane, so it is evaluated in
      // the transformed t-plane (same route as meijer_g).
      return meijer_g(spec, x);
  }
  throw std::logic_error("meijer_g_contour: unreachable");
}

}  // namespace fadcap
