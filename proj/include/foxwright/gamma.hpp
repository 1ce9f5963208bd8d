#ifndef FOXWRIGHT_GAMMA_HPP
#define FOXWRIGHT_GAMMA_HPP

#include <stdexcept>

namespace fw {

// Accuracy contract for the real-argument gamma kernel.  log_gamma meets
// rel_tol (relative to max(1, |ln Gamma|)) on [1e-3, 1e6]; digamma meets
// 1e-10 absolute on [0.1, 1e6].
struct GammaAccuracy {
  double rel_tol = 1e-12;

  GammaAccuracy() = default;
  explicit GammaAccuracy(double tol) : rel_tol(tol) {
    if (!(tol > 0.0) || !(tol < 1e-6))
      throw std::invalid_argument("GammaAccuracy: rel_tol must be in (0, 1e-6)");
  }
};

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

// Gamma(x)/Gamma(y), evaluated as exp(log_gamma(x) - log_gamma(y)) so that
// the ratio never forms Gamma values directly.
double gamma_ratio(double x, double y);

// psi(x) = Gamma'(x)/Gamma(x), x > 0.  Recurrence lift + asymptotic series.
double digamma(double x);

// Abscissa of the minimum of Gamma on (0, inf): the root of psi in (1, 2).
// Bisection to interval width 1e-12; computed once, cached thereafter.
double gamma_min_abscissa();

}  // namespace fw

#endif  // FOXWRIGHT_GAMMA_HPP
