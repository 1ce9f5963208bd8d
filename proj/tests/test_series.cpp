#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "foxwright/errors.hpp"
#include "foxwright/gamma.hpp"
#include "foxwright/series.hpp"

using namespace fw;
using cplx = std::complex<double>;

namespace {

FWParams single(double a, double A, double b, double B) {
  return FWParams({{a, A}}, {{b, B}});
}

// Independent coefficient oracle: U_k via libm lgamma, never through the
// library's gamma kernel.
double oracle_coefficient(const FWParams& params, int k) {
  double acc = -std::lgamma(k + 1.0);
  for (const ParamPair& pp : params.upper())
    acc += std::lgamma(pp.value + k * pp.weight) - std::lgamma(pp.value);
  for (const ParamPair& pp : params.lower())
    acc += std::lgamma(pp.value) - std::lgamma(pp.value + k * pp.weight);
  return std::exp(acc);
}

FWParams random_params(std::mt19937& rng, bool equal_weights) {
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_real_distribution<double> value(0.2, 6.0);
  std::uniform_real_distribution<double> weight(0.3, 2.0);
  const int p = size(rng);
  std::vector<ParamPair> up, lo;
  for (int i = 0; i < p; ++i) {
    const double w = weight(rng);
    up.push_back({value(rng), w});
    lo.push_back({value(rng), equal_weights ? w : weight(rng)});
  }
  return FWParams(up, lo);
}

}  // namespace

TEST_CASE("FWParams validation") {
  CHECK_THROWS_AS(single(-1.0, 1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(single(1.0, 0.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FWParams(std::vector<ParamPair>(17, {1.0, 1.0}), {}), std::invalid_argument);
  const FWParams empty({}, {});
  CHECK(empty.p() == 0);
  CHECK(empty.q() == 0);
}

TEST_CASE("convergence classification") {
  SUBCASE("entire when Delta = 0") {
    const ConvergenceClass cc = convergence(single(1, 1, 1, 1));
    CHECK(cc.verdict == ConvergenceVerdict::Entire);
    CHECK(cc.delta == doctest::Approx(0.0));
  }
  SUBCASE("disc of radius 1 for 1Psi0 with unit weight") {
    const ConvergenceClass cc = convergence(FWParams({{1.0, 1.0}}, {}));
    CHECK(cc.verdict == ConvergenceVerdict::Disc);
    CHECK(cc.rho == doctest::Approx(1.0));
    CHECK(cc.mu == doctest::Approx(-0.5));
    CHECK_FALSE(cc.boundary_converges);
  }
  SUBCASE("divergent when Delta < -1") {
    const ConvergenceClass cc = convergence(FWParams({{1.0, 2.0}}, {}));
    CHECK(cc.verdict == ConvergenceVerdict::Divergent);
    CHECK(cc.delta == doctest::Approx(-2.0));
  }
  SUBCASE("rho formula") {
    // upper weight 2, lower weight 1: rho = 2^-2 * 1^1 = 0.25, Delta = -1.
    const ConvergenceClass cc = convergence(single(1, 2, 1, 1));
    CHECK(cc.verdict == ConvergenceVerdict::Disc);
    CHECK(cc.rho == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("boundary flag tracks mu > 1/2") {
    // p = q+1 with unit weights: Disc, mu = sum b - sum a + 1/2.
    const ConvergenceClass cc = convergence(FWParams({{1.0, 1.0}, {1.0, 1.0}}, {{3.0, 1.0}}));
    CHECK(cc.verdict == ConvergenceVerdict::Disc);
    CHECK(cc.mu == doctest::Approx(1.5));
    CHECK(cc.boundary_converges);
  }
}

TEST_CASE("coefficient examples") {
  CHECK(coefficient(single(3.7, 0.4, 1.1, 2.2), 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(coefficient(single(2.5, 1, 2.5, 1), 2) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(coefficient(single(1, 1, 2, 1), 1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(coefficient(single(1, 1, 2, 1), -1), std::invalid_argument);
}

TEST_CASE("coefficient window") {
  const CoefficientWindow w = coefficient_window(single(1, 1, 2, 1), 6);
  CHECK(w.length() == 6);
  CHECK(w.log_values[0] == 0.0);
  for (std::size_t k = 0; k < w.length(); ++k) {
    CHECK(std::isfinite(w.log_values[k]));
    // U_k = 1/(k+1)! for these parameters.
    CHECK(std::exp(w.log_values[k]) == doctest::Approx(1.0 / std::tgamma(k + 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("coefficient overflow raises range_error") {
  // U_k = C(2k, k) ~ 4^k here; the linear value overflows near k = 512 while
  // the log form stays finite.
  const FWParams params({{1.0, 2.0}}, {{1.0, 1.0}});
  CHECK(std::isfinite(coefficient(params, 500)));
  CHECK(std::isfinite(log_coefficient(params, 520)));
  CHECK_THROWS_AS(coefficient(params, 520), std::range_error);
}

TEST_CASE("coefficient agrees with the lgamma oracle") {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 50; ++trial) {
    const FWParams params = random_params(rng, false);
    for (int k = 0; k <= 50; k += 7)
      CHECK(coefficient(params, k) == doctest::Approx(oracle_coefficient(params, k)).epsilon(1e-10));
  }
}

TEST_CASE("eval_fox_wright closed forms") {
  SUBCASE("collapses to exp") {
    CHECK(eval_fox_wright(single(1, 1, 1, 1), 1.0).real() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  }
  SUBCASE("geometric series via partial-sum oracle") {
    const FWParams params({{1.0, 1.0}}, {});
    // Oracle: direct partial sums of sum z^k.
    double expected = 0.0, term = 1.0;
    for (int k = 0; k < 200; ++k) {
      expected += term;
      term *= 0.5;
    }
    CHECK(eval_fox_wright(params, 0.5).real() == doctest::Approx(expected).epsilon(1e-13));
    CHECK(eval_fox_wright(params, 0.5).real() == doctest::Approx(2.0).epsilon(1e-13));
  }
  SUBCASE("value at zero is the leading gamma ratio") {
    CHECK(eval_fox_wright(single(2, 1, 1, 1), 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eval domain errors") {
  const FWParams disc({{1.0, 1.0}}, {});  // radius 1
  CHECK_THROWS_AS(eval_fox_wright(disc, 1.0), std::domain_error);
  CHECK_THROWS_AS(eval_fox_wright(disc, cplx(0.8, 0.7)), std::domain_error);
  const FWParams divergent({{1.0, 2.0}}, {});
  CHECK_THROWS_AS(eval_fox_wright(divergent, 0.1), std::domain_error);
  CHECK(eval_fox_wright(divergent, 0.0).real() == doctest::Approx(1.0));
  SeriesControl starved;
  starved.tol = 1e-30;
  starved.max_terms = 10;
  CHECK_THROWS_AS(eval_fox_wright(single(1, 1, 2, 1), 0.9, starved), NonConvergenceError);
}

TEST_CASE("eval_normalized closed forms") {
  SUBCASE("zero at zero") {
    CHECK(std::abs(eval_normalized(single(1.3, 0.7, 0.9, 1.4), 0.0)) == 0.0);
  }
  SUBCASE("upper == lower gives z exp(z)") {
    CHECK(eval_normalized(single(2.5, 1, 2.5, 1), 0.5).real() ==
          doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-13));
  }
  SUBCASE("(1,1)/(2,1) gives exp(z) - 1 via partial-sum oracle") {
    double expected = 0.0, factorial = 1.0;
    for (int k = 1; k <= 30; ++k) {
      factorial *= k;
      expected += std::pow(0.5, k) / factorial;
    }
    CHECK(eval_normalized(single(1, 1, 2, 1), 0.5).real() ==
          doctest::Approx(expected).epsilon(1e-13));
    CHECK(eval_normalized(single(1, 1, 2, 1), 0.5).real() ==
          doctest::Approx(std::exp(0.5) - 1.0).epsilon(1e-13));
  }
}

TEST_CASE("eval_derivative closed forms") {
  SUBCASE("f'(0) = 1") {
    CHECK(eval_derivative(single(1.7, 0.3, 2.2, 1.1), 0.0, 1).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("derivative of exp(z) - 1") {
    CHECK(eval_derivative(single(1, 1, 2, 1), 0.5, 1).real() ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-13));
  }
  SUBCASE("second derivative of z exp(z)") {
    CHECK(eval_derivative(single(2.5, 1, 2.5, 1), 0.5, 2).real() ==
          doctest::Approx(2.5 * std::exp(0.5)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(eval_derivative(single(1, 1, 2, 1), 0.5, 3), std::invalid_argument);
}

TEST_CASE("derivatives match central differences") {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> radius(0.05, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int trial = 0; trial < 10; ++trial) {
    const FWParams params = random_params(rng, true);
    const cplx z = std::polar(radius(rng), angle(rng));
    const double h = 1e-5;
    const cplx fd =
        (eval_normalized(params, z + h) - eval_normalized(params, z - h)) / (2.0 * h);
    const cplx d1 = eval_derivative(params, z, 1);
    CHECK(std::abs(d1 - fd) <= 1e-6 * std::max(1.0, std::abs(d1)));
  }
}

TEST_CASE("eval_hypergeometric closed forms") {
  SUBCASE("1F1(1;1;z) = exp(z)") {
    CHECK(eval_hypergeometric({1.0}, {1.0}, 0.7).real() ==
          doctest::Approx(std::exp(0.7)).epsilon(1e-13));
  }
  SUBCASE("2F1(1,1;2;z) = -log(1-z)/z") {
    CHECK(eval_hypergeometric({1.0, 1.0}, {2.0}, 0.5).real() ==
          doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-13));
    CHECK(eval_hypergeometric({1.0, 1.0}, {2.0}, 0.5).real() ==
          doctest::Approx(1.3862943611198906).epsilon(1e-13));
  }
  SUBCASE("1F0(1;;z) = 1/(1-z)") {
    CHECK(eval_hypergeometric({1.0}, {}, 0.25).real() ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  }
}

TEST_CASE("make_K_params") {
  SUBCASE("K1(1; z) = exp(z) - 1") {
    const FWParams params = make_K_params({1.0});
    CHECK(eval_normalized(params, 0.5).real() ==
          doctest::Approx(std::exp(0.5) - 1.0).epsilon(1e-13));
  }
  SUBCASE("empty list reproduces z exp(z)") {
    const FWParams params = make_K_params({});
    CHECK(eval_normalized(params, 0.5).real() ==
          doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-13));
  }
  SUBCASE("coefficient formula for two copies of 2") {
    const FWParams params = make_K_params({2.0, 2.0});
    CHECK(coefficient(params, 1) == doctest::Approx(4.0 / 9.0).epsilon(1e-13));
  }
}

TEST_CASE("truncation stability: doubling max_terms is inert") {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 10; ++trial) {
    const FWParams params = random_params(rng, true);
    SeriesControl ctl;
    const cplx base = eval_normalized(params, cplx(0.4, 0.3), ctl);
    ctl.max_terms *= 2;
    const cplx doubled = eval_normalized(params, cplx(0.4, 0.3), ctl);
    CHECK(std::abs(base - doubled) < 10.0 * ctl.tol);
  }
}

TEST_CASE("differentiation identity for the over-z series") {
  // d/dz (f/z) = prod G(a_i+A_i)/G(a_i) * prod G(b_j)/G(b_j+B_j) * shifted series,
  // with the shifted series taken at (a_i + A_i, A_i) / (b_j + B_j, B_j).
  std::mt19937 rng(272);
  std::uniform_real_distribution<double> radius(0.1, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int trial = 0; trial < 10; ++trial) {
    const FWParams params = random_params(rng, true);
    std::vector<ParamPair> up, lo;
    double log_const = 0.0;
    for (const ParamPair& pp : params.upper()) {
      up.push_back({pp.value + pp.weight, pp.weight});
      log_const += log_gamma(pp.value + pp.weight) - log_gamma(pp.value);
    }
    for (const ParamPair& pp : params.lower()) {
      lo.push_back({pp.value + pp.weight, pp.weight});
      log_const += log_gamma(pp.value) - log_gamma(pp.value + pp.weight);
    }
    const FWParams shifted(up, lo);
    const double scale = std::exp(log_const);
    for (int j = 0; j < 20; ++j) {
      const cplx z = std::polar(radius(rng), angle(rng));
      // d/dz (f/z) = (f'(z) - f(z)/z)/z.
      const cplx lhs =
          (eval_derivative(params, z, 1) - eval_normalized_over_z(params, z)) / z;
      const cplx rhs = scale * eval_normalized_over_z(shifted, z);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("reduction: upper == lower equals z exp(z) on 100 points") {
  const FWParams params({{1.8, 0.6}, {0.9, 1.1}}, {{1.8, 0.6}, {0.9, 1.1}});
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int i = 0; i < 100; ++i) {
    const cplx z = std::polar(radius(rng), angle(rng));
    CHECK(std::abs(eval_normalized(params, z) - z * std::exp(z)) < 1e-12);
  }
}

TEST_CASE("NormalizedSeries jet matches the one-shot evaluators") {
  std::mt19937 rng(616);
  for (int trial = 0; trial < 8; ++trial) {
    const FWParams params = random_params(rng, true);
    const NormalizedSeries series = NormalizedSeries::fox_wright(params);
    for (double r : {0.0, 0.3, 0.9}) {
      const cplx z = std::polar(r, 1.1);
      const NormalizedSeries::Jet jet = series.jet(z);
      CHECK(std::abs(jet.g - eval_normalized_over_z(params, z)) < 1e-11);
      // f' = g + z g'.
      CHECK(std::abs(jet.g + jet.zg1 - eval_derivative(params, z, 1)) < 1e-11);
      // z f'' = 2 z g' + z^2 g''.
      CHECK(std::abs(2.0 * jet.zg1 + jet.z2g2 - z * eval_derivative(params, z, 2)) < 1e-11);
    }
  }
}

TEST_CASE("NormalizedSeries from explicit coefficients") {
  // f(z) = z + 2 z^2: g = 1 + 2z, z g' = 2z, z^2 g'' = 0.
  const NormalizedSeries poly = NormalizedSeries::from_coefficients({1.0, 2.0});
  const NormalizedSeries::Jet jet = poly.jet(cplx(0.25, 0.0));
  CHECK(jet.g.real() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(jet.zg1.real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(jet.z2g2) == 0.0);
  CHECK_THROWS_AS(NormalizedSeries::from_coefficients({}), std::invalid_argument);
}
