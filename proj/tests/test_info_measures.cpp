#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fadcap/fading.hpp"
#include "fadcap/info_measures.hpp"

using namespace fadcap;

namespace {
const double kGbar15 = std::pow(10.0, 1.5);
}

TEST_CASE("shannon closed form reproduces the reference entropy column") {
  struct Row {
    double alpha, printed;
  };
  const Row rows[] = {{0.5, 7.03}, {1.0, 6.87}, {1.5, 6.56},
                      {2.0, 6.28}, {2.5, 6.05}, {3.0, 5.83}};
  for (const Row& r : rows) {
    const auto p = make_eta_params(r.alpha, 2.0, 1.0, kGbar15);
    CHECK(std::fabs(shannon_entropy_closed(p) - r.printed) < 0.008);
  }
  // lambda = 1/2 column maps to eta = 1/3
  const auto lam = make_eta_params(1.0, 1.0 / 3.0, 1.0, kGbar15);
  CHECK(std::fabs(shannon_entropy_closed(lam) - 6.86) < 0.008);
}

TEST_CASE("shannon closed vs oracle over the mu=1 grid") {
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    for (double eta : {1.0 / 3.0, 0.5, 2.0, 4.0}) {
      const auto p = make_eta_params(a, eta, 1.0, kGbar15);
      const double cl = shannon_entropy_closed(p);
      const double orc = entropy_oracle(FadingModel{p});
      CHECK(std::fabs(cl - orc) < 1e-8);
    }
  }
}

TEST_CASE("shannon closed form preconditions") {
  CHECK_THROWS_AS(shannon_entropy_closed(make_eta_params(2, 2, 2, 1)),
                  std::domain_error);
  CHECK_THROWS_AS(shannon_entropy_closed(make_eta_params(2, 1, 1, 1)),
                  std::domain_error);
}

TEST_CASE("entropy oracle exponential special case") {
  // alpha=2, eta=1, mu=1/2 is exponential: H = log2(e * gbar)
  const FadingModel m = make_eta_params(2.0, 1.0, 0.5, kGbar15);
  const double expected = std::log2(std::exp(1.0) * kGbar15);
  CHECK(entropy_oracle(m) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("entropy oracle is self-consistent across tolerances") {
  const FadingModel m = make_eta_params(2.0, 0.6, 2.0, 10.0);
  const double v = entropy_oracle(m);
  CHECK(v == doctest::Approx(v).epsilon(1e-10));
  CHECK(v > 0.0);
}

TEST_CASE("entropy decreases in alpha at fixed eta=2") {
  double prev = 1e9;
  for (double a : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const double h = shannon_entropy_closed(make_eta_params(a, 2, 1, kGbar15));
    CHECK(h < prev);
    prev = h;
  }
}

TEST_CASE("cross entropy closed equals entropy at matched alpha=2") {
  const auto p = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  const auto q = ref_coefficients(2.0, kGbar15);
  CHECK(cross_entropy_closed(p, q) ==
        doctest::Approx(shannon_entropy_closed(p)).epsilon(1e-10));
}

TEST_CASE("cross entropy closed vs oracle, eta=2 column") {
  // oracle-authoritative values for the alpha sweep against the matched
  // eta-mu reference (eta'=2, same mean): the alpha != 2 printed table
  // entries are not reproducible, see docs/formula-notes.md
  const auto q = ref_coefficients(2.0, kGbar15);
  const FadingModel qm = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  for (double a : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const auto p = make_eta_params(a, 2.0, 1.0, kGbar15);
    const double cl = cross_entropy_closed(p, q);
    const double orc = cross_entropy_oracle(FadingModel{p}, qm);
    CHECK(cl == doctest::Approx(orc).epsilon(1e-8));
  }
}

TEST_CASE("cross entropy oracle sanity: q = p reduces to entropy") {
  const FadingModel p = make_eta_params(2.0, 0.5, 1.0, 10.0);
  CHECK(cross_entropy_oracle(p, p) ==
        doctest::Approx(entropy_oracle(p)).epsilon(1e-8));
}

TEST_CASE("cross entropy oracle exponential analytic case") {
  // two exponentials with means m1, m2: H(p,q) = log2 m2 + (m1/m2)/ln 2
  const double m1 = 4.0, m2 = 9.0;
  const FadingModel p = make_eta_params(2.0, 1.0, 0.5, m1);
  const FadingModel q = make_eta_params(2.0, 1.0, 0.5, m2);
  const double expected = std::log2(m2) + (m1 / m2) / std::log(2.0);
  CHECK(cross_entropy_oracle(p, q) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("as-printed cross entropy is singular at alpha = 2") {
  const auto p = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  const auto q = ref_coefficients(2.0, kGbar15);
  CHECK_THROWS_AS(cross_entropy_closed(p, q, true), std::domain_error);
}

TEST_CASE("relative entropy basics") {
  const auto p = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  const auto q = ref_coefficients(2.0, kGbar15);
  CHECK(std::fabs(relative_entropy_closed(p, q)) < 1e-9);
  // Gibbs inequality on the oracle across a mixed grid
  const FadingModel qm = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    for (double eta : {0.5, 2.0, 3.0}) {
      const FadingModel pm = make_eta_params(a, eta, 1.0, kGbar15);
      CHECK(relative_entropy_oracle(pm, qm) >= -1e-9);
    }
  }
}

TEST_CASE("relative entropy of a model against itself is zero") {
  const FadingModel p = make_eta_params(1.5, 0.7, 2.0, 5.0);
  CHECK(relative_entropy_oracle(p, p) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
}

TEST_CASE("cross entropy minimum across the alpha sweep sits at alpha >= 2") {
  // the published narrative places the minimum at alpha = 2; the oracle puts
  // it slightly beyond (alpha = 3 edge of the sweep) - assert the oracle
  const auto q = ref_coefficients(2.0, kGbar15);
  double at2 = 0.0, min_v = 1e300;
  double argmin = 0.0;
  for (double a : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const auto p = make_eta_params(a, 2.0, 1.0, kGbar15);
    const double v = cross_entropy_closed(p, q);
    if (a == 2.0) at2 = v;
    if (v < min_v) {
      min_v = v;
      argmin = a;
    }
  }
  CHECK(argmin >= 2.0);
  CHECK(at2 - min_v < 0.3);  // alpha=2 is near-minimal even if not the argmin
}

TEST_CASE("report builders populate closed/oracle pairs") {
  const FadingModel m = make_eta_params(2.0, 2.0, 1.0, kGbar15);
  const auto rep = shannon_report(m);
  REQUIRE(rep.closed_form.has_value());
  CHECK(*rep.discrepancy < 1e-8);
  const auto rep2 = shannon_report(FadingModel{make_eta_params(2, 2, 2, 1)});
  CHECK_FALSE(rep2.closed_form.has_value());
  CHECK(rep2.oracle > 0.0);
}
