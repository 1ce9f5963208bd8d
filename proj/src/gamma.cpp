#include "foxwright/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace fw {
namespace {

void require_positive_finite(double x, const char* who) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error(std::string(who) + ": argument must be a positive finite real");
}

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set).
//   Gamma(x) = sqrt(2*pi) * t^(x-1/2) * e^(-t) * A(x),  t = x + g - 1/2,
//   A(x) = c0 + sum_{k=1..8} c_k / (x + k - 1).
// Good to ~1e-14 relative over the positive real axis.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosC[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;  // ln(2*pi)/2

double lanczos_sum(double x) {
  double s = kLanczosC[0];
  for (int k = 1; k < 9; ++k) s += kLanczosC[k] / (x + static_cast<double>(k - 1));
  return s;
}

// Even Bernoulli numbers B_2, B_4, ..., B_14 for the digamma asymptotic tail.
constexpr double kBernoulli2n[7] = {
    1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,   -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0,  7.0 / 6.0,
};

}  // namespace

double log_gamma(double x) {
  require_positive_finite(x, "log_gamma");
  const double t = x + kLanczosG - 0.5;
  return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double gamma_ratio(double x, double y) {
  require_positive_finite(x, "gamma_ratio");
  require_positive_finite(y, "gamma_ratio");
  // log Gamma(x) - log Gamma(y) with the Lanczos pieces recombined so that
  // nothing cancels when x and y are large and close:
  //   (x-1/2) ln tx - (y-1/2) ln ty - (tx - ty)
  //     = (x-1/2) log1p((x-y)/ty) + (x-y)(ln ty - 1),  t* = * + g - 1/2.
  const double ty = y + kLanczosG - 0.5;
  const double diff = (x - 0.5) * std::log1p((x - y) / ty) + (x - y) * (std::log(ty) - 1.0) +
                      std::log(lanczos_sum(x) / lanczos_sum(y));
  return std::exp(diff);
}

double digamma(double x) {
  require_positive_finite(x, "digamma");
  // Lift small arguments with psi(x) = psi(x+1) - 1/x until x >= 10, then
  // use the Stirling-type expansion
  //   psi(x) ~ ln x - 1/(2x) - sum_n B_2n / (2n x^(2n)).
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double p = inv2;
  for (int n = 1; n <= 7; ++n) {
    tail += kBernoulli2n[n - 1] * p / (2.0 * n);
    p *= inv2;
  }
  return shift + std::log(x) - 0.5 * inv - tail;
}

double gamma_min_abscissa() {
  static const double cached = [] {
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (digamma(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return cached;
}

}  // namespace fw
