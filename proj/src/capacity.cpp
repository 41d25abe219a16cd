#include "fadcap/capacity.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "fadcap/meijerg.hpp"
#include "fadcap/quadrature.hpp"
#include "fadcap/roots.hpp"
#include "fadcap/specfun.hpp"

namespace fadcap {
namespace {

constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kPi = 3.14159265358979323846264338327950288;

bool near_integer(double v, double lo = 1.0) {
  return std::fabs(v - std::round(v)) < 1e-9 && v >= lo - 1e-9;
}

// Safe |ln eta| separation before the finite closed-form sums start losing
// digits to cancellation; the loss deepens roughly like delta^(2 mu - 1).
double safe_log_eta_sep(int mu) {
  if (mu <= 1) return 1e-7;
  if (mu == 2) return 0.01;
  return 0.05;
}

// The density (and hence the capacity) is invariant under eta -> 1/eta, so
// C(exp(delta)) is an even function of delta. When the requested eta sits
// inside the cancellation zone, evaluate at three safely separated deltas and
// extrapolate the quadratic in delta^2 back to the requested point.
double eval_even_log_eta(double eta, int mu,
                         const std::function<double(double)>& f) {
  const double delta_req = std::fabs(std::log(eta));
  const double delta_safe = safe_log_eta_sep(mu);
  if (delta_req >= delta_safe) return f(eta);

  const double d[3] = {delta_safe, 1.4 * delta_safe, 1.8 * delta_safe};
  double x[3], y[3];
  for (int j = 0; j < 3; ++j) {
    x[j] = d[j] * d[j];
    y[j] = f(std::exp(d[j]));
  }
  const double xr = delta_req * delta_req;
  double acc = 0.0;  // Lagrange through the three (delta^2, C) points
  for (int j = 0; j < 3; ++j) {
    double lj = 1.0;
    for (int k = 0; k < 3; ++k) {
      if (k != j) lj *= (xr - x[k]) / (x[j] - x[k]);
    }
    acc += lj * y[j];
  }
  return acc;
}

bool in_extrapolation_zone(const AlphaEtaMuParams& p) {
  if (!near_integer(p.mu)) return false;
  return std::fabs(std::log(p.eta)) <
         safe_log_eta_sep(static_cast<int>(std::round(p.mu)));
}

double ora_closed_at(const AlphaEtaMuParams& p, bool include_second_branch) {
  const int alpha = static_cast<int>(std::round(p.alpha));
  const int mu = static_cast<int>(std::round(p.mu));
  const EtaCoefficients co = coefficients(p);
  const double big_d = std::fabs(co.d1);
  const double s_minus = co.c1 - big_d;
  const double s_plus = co.c1 + big_d;

  double accum = 0.0;
  for (int i = 0; i < mu; ++i) {
    const double a_i =
        std::tgamma(mu + i) / (std::tgamma(i + 1) * std::tgamma(mu - i));
    const double c_i = co.b1 * a_i /
                       (std::sqrt(2.0 * kPi * big_d) * std::pow(2.0 * big_d, i));
    const double beta_i = 0.5 * p.alpha * (mu - i);
    const MeijerGSpec spec = make_capacity_spec(alpha, beta_i);
    const double pref = capacity_spec_prefactor(alpha);
    const double j_minus =
        pref * meijer_g(spec, 0.25 * s_minus * s_minus);
    double term = ((i % 2 == 0) ? 1.0 : -1.0) * j_minus;
    if (include_second_branch) {
      const double j_plus = pref * meijer_g(spec, 0.25 * s_plus * s_plus);
      term += ((mu % 2 == 0) ? 1.0 : -1.0) * j_plus;
    }
    accum += c_i * term;
  }
  return accum / kLn2;
}

double opra_closed_at(const AlphaEtaMuParams& p, double gamma0) {
  const int mu = static_cast<int>(std::round(p.mu));
  const double eta = p.eta;
  const double h = std::pow(p.mean_snr, 0.5 * p.alpha);
  const double u0 = std::pow(gamma0, 0.5 * p.alpha);
  const double x_minus = (1.0 + eta) * mu * u0 / (eta * h);
  const double x_plus = (1.0 + eta) * mu * u0 / h;

  double accum = 0.0;
  for (int k = 0; k < mu; ++k) {
    const double gk = std::tgamma(mu + k);
    const double kfact = std::tgamma(k + 1);
    const double denom_pow = std::pow(eta - 1.0, mu + k);  // signed
    const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
    const double sign_mu = (mu % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i <= mu - k - 1; ++i) {
      const double ifact = std::tgamma(i + 1);
      const double scale = gk / (kfact * ifact * denom_pow);
      accum += sign_k * std::pow(eta, mu) * scale *
               upper_incomplete_gamma(i, x_minus);
      accum += sign_mu * std::pow(eta, k) * scale *
               upper_incomplete_gamma(i, x_plus);
    }
  }
  return 2.0 * accum / (p.alpha * kLn2 * std::tgamma(p.mu));
}

}  // namespace

double c_ora_closed(const AlphaEtaMuParams& p, bool include_second_branch) {
  if (!near_integer(p.alpha)) {
    throw std::domain_error("closed form requires integer alpha (use oracle)");
  }
  if (!near_integer(p.mu)) {
    throw std::domain_error("closed form requires integer mu (use oracle)");
  }
  const int mu = static_cast<int>(std::round(p.mu));
  return eval_even_log_eta(p.eta, mu, [&](double eta) {
    AlphaEtaMuParams q = p;
    q.eta = eta;
    return ora_closed_at(q, include_second_branch);
  });
}

double c_ora_oracle(const FadingModel& model) {
  const AlphaEtaMuParams p = resolve_eta(model);
  return integrate_semi_infinite(
             [&](double g) {
               return std::log1p(g) / kLn2 * std::exp(log_pdf_snr(p, g));
             },
             0.0, 1e-11)
      .value;
}

double solve_gamma0(const FadingModel& model) {
  const AlphaEtaMuParams p = resolve_eta(model);
  const auto constraint = [&](double g0) {
    const double v = integrate_semi_infinite(
                         [&](double g) {
                           return (1.0 / g0 - 1.0 / g) *
                                  std::exp(log_pdf_snr(p, g));
                         },
                         g0, 1e-11)
                         .value;
    return v - 1.0;
  };

  double lo = 1e-8 * p.mean_snr;
  double hi = p.mean_snr;
  // The constraint is decreasing in gamma0; widen the bracket if needed.
  int guard = 0;
  while (constraint(hi) > 0.0 && guard++ < 60) hi *= 2.0;
  guard = 0;
  while (constraint(lo) < 0.0 && guard++ < 60) lo *= 0.1;
  return find_root_bracketed(constraint, lo, hi, 1e-10);
}

double c_opra_closed(const AlphaEtaMuParams& p, double gamma0) {
  if (!near_integer(p.mu)) {
    throw std::domain_error("closed form requires integer mu (use oracle)");
  }
  if (!(gamma0 > 0.0)) {
    throw std::domain_error("c_opra_closed: requires gamma0 > 0");
  }
  const int mu = static_cast<int>(std::round(p.mu));
  return eval_even_log_eta(p.eta, mu, [&](double eta) {
    AlphaEtaMuParams q = p;
    q.eta = eta;
    return opra_closed_at(q, gamma0);
  });
}

double c_opra_oracle(const FadingModel& model, double gamma0) {
  if (!(gamma0 > 0.0)) {
    throw std::domain_error("c_opra_oracle: requires gamma0 > 0");
  }
  const AlphaEtaMuParams p = resolve_eta(model);
  return integrate_semi_infinite(
             [&](double g) {
               return std::log(g / gamma0) / kLn2 *
                      std::exp(log_pdf_snr(p, g));
             },
             gamma0, 1e-11)
      .value;
}

CapacityReport capacity_report(const FadingModel& model, Policy policy) {
  const AlphaEtaMuParams p = resolve_eta(model);
  CapacityReport rep;
  rep.policy = policy;
  if (policy == Policy::Ora) {
    rep.oracle = c_ora_oracle(model);
    try {
      rep.closed_form = c_ora_closed(p);
      rep.eta_extrapolated = in_extrapolation_zone(p);
    } catch (const std::domain_error&) {
      rep.closed_form.reset();
    }
  } else {
    const double g0 = solve_gamma0(model);
    rep.gamma0 = g0;
    rep.oracle = c_opra_oracle(model, g0);
    try {
      rep.closed_form = c_opra_closed(p, g0);
      rep.eta_extrapolated = in_extrapolation_zone(p);
    } catch (const std::domain_error&) {
      rep.closed_form.reset();
    }
  }
  if (rep.closed_form) {
    rep.discrepancy = std::fabs(*rep.closed_form - rep.oracle);
  }
  return rep;
}

}  // namespace fadcap
