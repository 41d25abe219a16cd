#pragma once

#include <complex>
#include <vector>

namespace fadcap {

// Order tuple plus parameter rows of a Meijer G-function, restricted to the
// three shapes used by the capacity closed form:
//   (a) the exponential primitive  G^{1,0}_{0,1}(x | - ; 0) = e^-x
//   (b) the logarithm primitive    G^{1,2}_{2,2}(x | 1,1 ; 1,0) = ln(1+x)
//   (c) the composite capacity shape with integer alpha (see make_capacity_spec)
struct MeijerGSpec {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<double> a_params;  // length p
  std::vector<double> b_params;  // length q
};

enum class GShape { Exponential, Logarithm, CapacityComposite };

// Validates the spec and identifies its shape. Throws std::invalid_argument
// for anything outside the restricted class.
GShape classify_spec(const MeijerGSpec& spec);

MeijerGSpec make_exp_spec();
MeijerGSpec make_log_spec();

// Composite shape for one term of the capacity sum: order
// G^{alpha+2, 2alpha}_{2alpha, 2alpha+2} with rows built from
// Delta(alpha, 1 - beta) (twice) on top and {0, 1/2}, Delta(alpha, 1 - beta),
// Delta(alpha, -beta) on the bottom, where beta = alpha (mu - i) / 2 is the
// power of the integrand gamma^(beta - 1). The argument is (s/2)^2 for the
// exponential rate s.
MeijerGSpec make_capacity_spec(int alpha, double beta);

// Prefactor K such that
//   int_0^inf ln(1+x) x^(beta-1) e^(-s x^(alpha/2)) dx = K * G(spec, (s/2)^2)
// for the composite shape: K = 2 sqrt(pi) / (alpha 2^alpha pi^alpha).
double capacity_spec_prefactor(int alpha);

// Evaluates the restricted Meijer G at x > 0. Primitive shapes short-circuit
// to their elementary forms; the composite shape is evaluated by the
// Mellin-Barnes route of capacity_log_kernel.
double meijer_g(const MeijerGSpec& spec, double x);

// Same, but primitives are forced through the numerical contour integral
// (used to validate the contour machinery against the elementary identities).
double meijer_g_contour(const MeijerGSpec& spec, double x);

// J(beta, alpha, s) = int_0^inf ln(1+x) x^(beta-1) e^(-s x^(alpha/2)) dx
// computed as a Mellin-Barnes integral over the vertical line Re t = -1/2:
//   J = (1/2 pi i) int [pi / (t sin(pi t))] (2/alpha)
//         Gamma(2(beta-t)/alpha) s^(-2(beta-t)/alpha) dt.
// Requires alpha > 0, beta > 0, s > 0.
double capacity_log_kernel(double beta, double alpha, double s);

// Principal-branch-agnostic complex log-gamma (Lanczos); exp of the result
// always reproduces Gamma(z).
std::complex<double> ln_gamma_complex(std::complex<double> z);

}  // namespace fadcap
