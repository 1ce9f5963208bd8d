#include "foxwright/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "foxwright/errors.hpp"
#include "foxwright/gamma.hpp"

namespace fw {
namespace {

constexpr double kDeltaTol = 1e-12;       // tolerance for Delta == -1 detection
constexpr double kDiscSafety = 1e-9;      // require |z| < rho * (1 - kDiscSafety)
constexpr double kLogDoubleMax = 709.0;   // exp() overflow threshold, with headroom

void check_pairs(const std::vector<ParamPair>& row, const char* name) {
  if (row.size() > 16)
    throw std::invalid_argument(std::string("FWParams: ") + name + " row exceeds 16 pairs");
  for (const ParamPair& pp : row) {
    if (!std::isfinite(pp.value) || pp.value <= 0.0 || !std::isfinite(pp.weight) ||
        pp.weight <= 0.0)
      throw std::invalid_argument(std::string("FWParams: ") + name +
                                  " row requires positive finite values and weights");
  }
}

}  // namespace

FWParams::FWParams(std::vector<ParamPair> upper, std::vector<ParamPair> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  check_pairs(upper_, "upper");
  check_pairs(lower_, "lower");
}

void SeriesControl::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("SeriesControl: tol must be positive");
  if (max_terms <= min_terms)
    throw std::invalid_argument("SeriesControl: max_terms must exceed min_terms");
  if (min_terms < 1) throw std::invalid_argument("SeriesControl: min_terms must be at least 1");
}

ConvergenceClass convergence(const FWParams& params) {
  double sum_a_weights = 0.0, sum_b_weights = 0.0;
  double log_rho = 0.0;
  double sum_a = 0.0, sum_b = 0.0;
  for (const ParamPair& pp : params.upper()) {
    sum_a_weights += pp.weight;
    log_rho -= pp.weight * std::log(pp.weight);
    sum_a += pp.value;
  }
  for (const ParamPair& pp : params.lower()) {
    sum_b_weights += pp.weight;
    log_rho += pp.weight * std::log(pp.weight);
    sum_b += pp.value;
  }

  ConvergenceClass out;
  out.delta = sum_b_weights - sum_a_weights;
  out.rho = std::exp(log_rho);
  out.mu = sum_b - sum_a +
           (static_cast<double>(params.p()) - static_cast<double>(params.q())) / 2.0;
  if (std::abs(out.delta + 1.0) <= kDeltaTol)
    out.verdict = ConvergenceVerdict::Disc;
  else if (out.delta > -1.0)
    out.verdict = ConvergenceVerdict::Entire;
  else
    out.verdict = ConvergenceVerdict::Divergent;
  out.boundary_converges = out.verdict == ConvergenceVerdict::Disc && out.mu > 0.5;
  return out;
}

double log_coefficient(const FWParams& params, int k) {
  if (k < 0) throw std::invalid_argument("log_coefficient: k must be non-negative");
  const double kk = static_cast<double>(k);
  double acc = -log_gamma(kk + 1.0);
  for (const ParamPair& pp : params.upper())
    acc += log_gamma(pp.value + kk * pp.weight) - log_gamma(pp.value);
  for (const ParamPair& pp : params.lower())
    acc += log_gamma(pp.value) - log_gamma(pp.value + kk * pp.weight);
  return acc;
}

double coefficient(const FWParams& params, int k) {
  const double lg = log_coefficient(params, k);
  if (lg > kLogDoubleMax)
    throw std::range_error("coefficient: U_k exceeds the representable range");
  return std::exp(lg);
}

CoefficientWindow coefficient_window(const FWParams& params, int len) {
  if (len < 1) throw std::invalid_argument("coefficient_window: length must be positive");
  CoefficientWindow window;
  window.log_values.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) window.log_values.push_back(log_coefficient(params, k));
  // U_0 = 1 exactly; clear the rounding residue of the log-gamma cancellation.
  window.log_values[0] = 0.0;
  return window;
}

namespace {

// Shared series loop: sums sum_k s_k exp(L_k) m(k) z^k where L_k is a
// log-magnitude table entry, s_k its sign and m(k) a polynomial multiplier
// (1, k+1, (k+1)k, ... depending on what is being evaluated).
struct TermSource {
  virtual ~TermSource() = default;
  virtual double log_mag(int k) const = 0;
  virtual double sign(int k) const = 0;
};

std::complex<double> sum_series(const TermSource& src, std::complex<double> z,
                                const SeriesControl& ctl, double (*mult)(int)) {
  const double r = std::abs(z);
  if (r == 0.0) {
    const double m0 = mult(0);
    return m0 == 0.0 ? 0.0 : src.sign(0) * std::exp(src.log_mag(0)) * m0;
  }
  const double log_r = std::log(r);
  const std::complex<double> rot = z / r;  // e^{i arg z}
  std::complex<double> phase = 1.0;
  std::complex<double> sum = 0.0;
  int quiet_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const double lm = src.log_mag(k) + k * log_r;
    if (lm > kLogDoubleMax) throw std::range_error("series term exceeds representable range");
    const double mag = std::exp(lm) * mult(k);
    sum += src.sign(k) * mag * phase;
    phase *= rot;
    if (k >= ctl.min_terms && std::abs(mag) <= ctl.tol * std::max(1.0, std::abs(sum))) {
      if (++quiet_run >= 3) return sum;
    } else {
      quiet_run = 0;
    }
  }
  throw NonConvergenceError("series did not meet the stopping rule within max_terms");
}

struct FoxWrightTerms : TermSource {
  const FWParams& params;
  double offset;  // added to ln U_k (0 for U_k, -lnC for the raw series)
  explicit FoxWrightTerms(const FWParams& p, double off) : params(p), offset(off) {}
  double log_mag(int k) const override { return log_coefficient(params, k) + offset; }
  double sign(int) const override { return 1.0; }
};

double mult_one(int) { return 1.0; }
double mult_d1(int k) { return static_cast<double>(k + 1); }

// ln[prod Gamma(b_j) / prod Gamma(a_i)], the normalization constant of U_k.
double log_norm_constant(const FWParams& params) {
  double acc = 0.0;
  for (const ParamPair& pp : params.lower()) acc += log_gamma(pp.value);
  for (const ParamPair& pp : params.upper()) acc -= log_gamma(pp.value);
  return acc;
}

void check_domain(const FWParams& params, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("evaluation point must be finite");
  const ConvergenceClass cc = convergence(params);
  switch (cc.verdict) {
    case ConvergenceVerdict::Entire:
      return;
    case ConvergenceVerdict::Disc:
      if (std::abs(z) >= cc.rho * (1.0 - kDiscSafety))
        throw std::domain_error("evaluation point lies outside the disc of convergence");
      return;
    case ConvergenceVerdict::Divergent:
      if (std::abs(z) != 0.0)
        throw std::domain_error("series diverges for every nonzero argument");
      return;
  }
}

}  // namespace

std::complex<double> eval_fox_wright(const FWParams& params, std::complex<double> z,
                                     const SeriesControl& ctl) {
  ctl.validate();
  check_domain(params, z);
  return sum_series(FoxWrightTerms(params, -log_norm_constant(params)), z, ctl, mult_one);
}

std::complex<double> eval_normalized_over_z(const FWParams& params, std::complex<double> z,
                                            const SeriesControl& ctl) {
  ctl.validate();
  check_domain(params, z);
  return sum_series(FoxWrightTerms(params, 0.0), z, ctl, mult_one);
}

std::complex<double> eval_normalized(const FWParams& params, std::complex<double> z,
                                     const SeriesControl& ctl) {
  return z * eval_normalized_over_z(params, z, ctl);
}

std::complex<double> eval_derivative(const FWParams& params, std::complex<double> z, int order,
                                     const SeriesControl& ctl) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("eval_derivative: order must be 1 or 2");
  ctl.validate();
  check_domain(params, z);
  const FoxWrightTerms terms(params, 0.0);
  if (order == 1) return sum_series(terms, z, ctl, mult_d1);  // sum (k+1) U_k z^k
  // f'' = sum_{k>=1} (k+1) k U_k z^(k-1); reindex via m = k-1:
  //     = sum_m (m+2)(m+1) U_{m+1} z^m.
  struct Shifted : TermSource {
    const FWParams& params;
    explicit Shifted(const FWParams& p) : params(p) {}
    double log_mag(int k) const override { return log_coefficient(params, k + 1); }
    double sign(int) const override { return 1.0; }
  };
  return sum_series(Shifted(params), z, ctl,
                    [](int m) { return static_cast<double>(m + 2) * static_cast<double>(m + 1); });
}

std::complex<double> eval_hypergeometric(const std::vector<double>& upper_a,
                                         const std::vector<double>& lower_b,
                                         std::complex<double> z, const SeriesControl& ctl) {
  std::vector<ParamPair> up, lo;
  up.reserve(upper_a.size());
  lo.reserve(lower_b.size());
  for (double a : upper_a) up.push_back({a, 1.0});
  for (double b : lower_b) lo.push_back({b, 1.0});
  const FWParams params(std::move(up), std::move(lo));
  // With unit weights the normalization constant is exactly the pFq prefactor,
  // so the normalized over-z series is pFq itself.
  return eval_normalized_over_z(params, z, ctl);
}

FWParams make_K_params(const std::vector<double>& a_list) {
  std::vector<ParamPair> up, lo;
  up.reserve(a_list.size());
  lo.reserve(a_list.size());
  for (double a : a_list) {
    up.push_back({a, 1.0});
    lo.push_back({a + 1.0, 1.0});
  }
  return FWParams(std::move(up), std::move(lo));
}

// ---------------------------------------------------------------------------
// NormalizedSeries

NormalizedSeries NormalizedSeries::fox_wright(const FWParams& params, const SeriesControl& ctl) {
  ctl.validate();
  NormalizedSeries s;
  s.finite_ = false;
  s.upper_ = params.upper();
  s.lower_ = params.lower();
  s.ctl_ = ctl;
  return s;
}

NormalizedSeries NormalizedSeries::from_coefficients(std::vector<double> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("NormalizedSeries: coefficient list must be non-empty");
  NormalizedSeries s;
  s.finite_ = true;
  s.log_mag_.reserve(coeffs.size());
  s.sign_.reserve(coeffs.size());
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("NormalizedSeries: coefficients must be finite");
    s.log_mag_.push_back(c == 0.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log(std::abs(c)));
    s.sign_.push_back(c == 0.0 ? 0.0 : (c > 0.0 ? 1.0 : -1.0));
  }
  return s;
}

void NormalizedSeries::extend(int n) const {
  if (finite_ || static_cast<int>(log_mag_.size()) >= n) return;
  const int grow_to = std::max({n, static_cast<int>(log_mag_.size()) * 2, 64});
  const FWParams params(upper_, lower_);
  for (int k = static_cast<int>(log_mag_.size()); k < grow_to; ++k) {
    log_mag_.push_back(log_coefficient(params, k));
    sign_.push_back(1.0);
  }
  log_mag_[0] = 0.0;  // U_0 = 1 exactly
}

int NormalizedSeries::truncation_for(double r) const {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::domain_error("NormalizedSeries: radius must be finite and non-negative");
  if (finite_) return static_cast<int>(log_mag_.size());
  const double log_r = r > 0.0 ? std::log(r) : 0.0;
  int quiet_run = 0;
  for (int k = 0; k < ctl_.max_terms; ++k) {
    extend(k + 1);
    const double lm =
        (r > 0.0 || k == 0) ? log_mag_[static_cast<std::size_t>(k)] + k * log_r
                            : -std::numeric_limits<double>::infinity();
    if (lm > kLogDoubleMax) throw std::range_error("series term exceeds representable range");
    // Magnitude-only stopping: stricter than the per-point rule, since
    // max(1, |sum|) >= 1 for every angle on the circle.
    if (k >= ctl_.min_terms && std::exp(lm) <= ctl_.tol) {
      if (++quiet_run >= 3) return k + 1;
    } else {
      quiet_run = 0;
    }
  }
  throw NonConvergenceError("series did not meet the stopping rule within max_terms");
}

NormalizedSeries::RadialSlice NormalizedSeries::at_radius(double r) const {
  const int n = truncation_for(r);
  extend(n);
  RadialSlice slice;
  slice.weights_.resize(static_cast<std::size_t>(n));
  const double log_r = r > 0.0 ? std::log(r) : 0.0;
  for (int k = 0; k < n; ++k) {
    const double s = sign_[static_cast<std::size_t>(k)];
    if (k > 0 && r == 0.0) {
      slice.weights_[static_cast<std::size_t>(k)] = 0.0;
      continue;
    }
    const double lm = log_mag_[static_cast<std::size_t>(k)] + k * log_r;
    slice.weights_[static_cast<std::size_t>(k)] = s * std::exp(lm);
  }
  return slice;
}

NormalizedSeries::Jet NormalizedSeries::RadialSlice::at_angle(double theta) const {
  const std::complex<double> rot = std::polar(1.0, theta);
  std::complex<double> phase = 1.0;
  std::complex<double> g = 0.0, zg1 = 0.0, z2g2 = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const std::complex<double> term = weights_[k] * phase;
    const double kk = static_cast<double>(k);
    g += term;
    zg1 += kk * term;
    z2g2 += kk * (kk - 1.0) * term;
    phase *= rot;
  }
  return {g, zg1, z2g2};
}

NormalizedSeries::Jet NormalizedSeries::jet(std::complex<double> z) const {
  const double r = std::abs(z);
  const RadialSlice slice = at_radius(r);
  return slice.at_angle(r == 0.0 ? 0.0 : std::arg(z));
}

}  // namespace fw
