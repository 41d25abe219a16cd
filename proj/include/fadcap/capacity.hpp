#pragma once

#include <optional>
#include <string>

#include "fadcap/fading.hpp"

namespace fadcap {

enum class Policy { Ora, Opra };

struct CapacityReport {
  Policy policy = Policy::Ora;
  std::optional<double> closed_form;  // bits/s/Hz (C/B); absent when the
                                      // parameters do not admit the closed form
  double oracle = 0.0;                // bits/s/Hz
  std::optional<double> gamma0;       // OPRA only (linear SNR)
  std::optional<double> discrepancy;  // |closed - oracle| when closed present
  bool eta_extrapolated = false;      // closed form went through the
                                      // degenerate-eta extrapolation
};

// ORA capacity closed form (integer alpha and mu). Near eta = 1 the finite
// Bessel expansion cancels catastrophically, so the value is obtained by
// even-in-ln(eta) extrapolation from safely separated eta values (the density
// is invariant under eta -> 1/eta, making the capacity even in ln eta).
// include_second_branch = false reproduces the published single-branch sum
// for comparison (ledger correction "ora-second-branch").
double c_ora_closed(const AlphaEtaMuParams& p,
                    bool include_second_branch = true);

// Definitional oracle C/B = int log2(1 + gamma) p(gamma) dgamma.
double c_ora_oracle(const FadingModel& model);

// Cutoff SNR from the unit-normalized average-power constraint
// int_{gamma0}^inf (1/gamma0 - 1/gamma) p(gamma) dgamma = 1.
double solve_gamma0(const FadingModel& model);

// OPRA capacity closed form (integer mu, real alpha), evaluated exactly as
// published (it validates against the oracle as-is); degenerate eta goes
// through the same extrapolation as ORA.
double c_opra_closed(const AlphaEtaMuParams& p, double gamma0);

// Definitional oracle C/B = int_{gamma0}^inf log2(gamma/gamma0) p dgamma.
double c_opra_oracle(const FadingModel& model, double gamma0);

// Orchestrates closed form (when admissible) + oracle (+ gamma0 for OPRA).
CapacityReport capacity_report(const FadingModel& model, Policy policy);

}  // namespace fadcap
