#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "fadcap/quadrature.hpp"

namespace fadcap {

// Parameters of the alpha-eta-mu SNR distribution. mean_snr is the linear
// nominal SNR gamma-bar (dB conversion happens only at the CLI boundary).
// Note: gamma-bar acts as the distribution's scale parameter; the first
// moment equals gamma-bar exactly when alpha = 2 (see docs/formula-notes.md).
struct AlphaEtaMuParams {
  double alpha;
  double eta;
  double mu;
  double mean_snr;
};

// Parameters of the companion alpha-lambda-mu form, |lambda| < 1.
struct AlphaLambdaMuParams {
  double alpha;
  double lambda;
  double mu;
  double mean_snr;
};

using FadingModel = std::variant<AlphaEtaMuParams, AlphaLambdaMuParams>;

// Validating constructors; throw std::domain_error on bad parameters.
AlphaEtaMuParams make_eta_params(double alpha, double eta, double mu,
                                 double mean_snr);
AlphaLambdaMuParams make_lambda_params(double alpha, double lambda, double mu,
                                       double mean_snr);

// eta = (1 - lambda) / (1 + lambda); alpha, mu, mean_snr carried over.
AlphaEtaMuParams to_eta_model(const AlphaLambdaMuParams& p);

// Resolves either variant to the eta-form used by all evaluations.
AlphaEtaMuParams resolve_eta(const FadingModel& model);

// Derived coefficients the closed forms are written in. c1 and d1 carry the
// mu factor (they reduce to the mu = 1 definitions C1, D1); d1 keeps the sign
// of eta^2 - 1 and is exactly 0 at eta = 1 (degenerate flag set). b1 is the
// density prefactor under the magnitude convention |eta - 1|^(mu - 1/2); it
// reduces to the familiar B1 at mu = 1 and is +inf when degenerate.
struct EtaCoefficients {
  double b1;
  double c1;
  double d1;
  bool degenerate;
};

EtaCoefficients coefficients(const AlphaEtaMuParams& p);

// SNR density and its exact logarithm (the log form never underflows and is
// what the entropy oracles integrate). gamma <= 0 is a domain error.
double pdf_snr(const FadingModel& model, double gamma);
double log_pdf_snr(const AlphaEtaMuParams& p, double gamma);

// CDF by quadrature of the density over (0, gamma].
double cdf_snr(const FadingModel& model, double gamma);

// k-th moment by quadrature (k >= 0).
double moment(const FadingModel& model, double k);

// Physical-model sampler: the power variable is a sum over 2 mu clusters of
// X^2 + Y^2 with Var X / Var Y = eta, then gamma = gamma-bar *
// (W / E[W])^(2/alpha). Requires integer mu; deterministic under seed.
std::vector<double> sample(const FadingModel& model, std::size_t n,
                           std::uint64_t seed);

}  // namespace fadcap
