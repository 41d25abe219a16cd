#pragma once

#include <optional>
#include <string>

#include "fadcap/fading.hpp"

namespace fadcap {

// Coefficients of the eta-mu reference distribution (alpha fixed to 2) used
// by the cross/relative entropy closed forms. b2/c2/d2 follow the corrected
// definitions (see docs/formula-notes.md); d2 uses the symmetric reading
// |eta'^2 - 1| / (2 eta' gbar').
struct RefEtaCoefficients {
  double b2;
  double c2;
  double d2;
  double eta_ref;
  double mean_snr_ref;
};

RefEtaCoefficients ref_coefficients(double eta_ref, double mean_snr_ref);

struct EntropyReport {
  std::optional<double> closed_form;  // bits; absent when mu != 1 or eta = 1
  double oracle = 0.0;                // bits
  std::optional<double> discrepancy;  // |closed - oracle| when closed present
  std::string model_tag;
  std::string ref_tag;  // cross/relative only
};

// Shannon entropy closed form (mu = 1, eta != 1), in bits. With
// as_printed = true the uncorrected published expression is evaluated
// verbatim for comparison; the default applies the ledger corrections.
double shannon_entropy_closed(const AlphaEtaMuParams& p,
                              bool as_printed = false);

// Definitional quadrature oracle H(p) = -int p log2 p, any valid model.
double entropy_oracle(const FadingModel& model);

// Cross entropy H(p, q) against the eta-mu reference, closed evaluation
// (mu = 1 for p). The corrected route evaluates the two exact coefficient
// groups in closed form plus one well-behaved correction integral; the
// as-printed route reproduces the published expression (singular at alpha=2).
double cross_entropy_closed(const AlphaEtaMuParams& p,
                            const RefEtaCoefficients& q,
                            bool as_printed = false);

// Definitional oracle H(p, q) = -int p log2 q.
double cross_entropy_oracle(const FadingModel& p, const FadingModel& q);

// Relative entropy D(p||q) = H(p,q) - H(p), consistent pairs only.
double relative_entropy_closed(const AlphaEtaMuParams& p,
                               const RefEtaCoefficients& q,
                               bool as_printed = false);
double relative_entropy_oracle(const FadingModel& p, const FadingModel& q);

// Report builders pairing closed forms (when parameters admit them) with the
// oracle value. The reference for cross/relative defaults to the matched
// eta-mu distribution (eta' = mapped eta, gbar' = gbar, mu = 1).
EntropyReport shannon_report(const FadingModel& model);
EntropyReport cross_report(const FadingModel& model, double eta_ref,
                           double mean_snr_ref);
EntropyReport relative_report(const FadingModel& model, double eta_ref,
                              double mean_snr_ref);

}  // namespace fadcap
