#ifndef FOXWRIGHT_SERIES_HPP
#define FOXWRIGHT_SERIES_HPP

#include <complex>
#include <vector>

#include "foxwright/params.hpp"

namespace fw {

// Delta = sum B_j - sum A_i, rho = prod A_i^(-A_i) * prod B_j^(B_j),
// mu = sum b_j - sum a_i + (p - q)/2.  Entire when Delta > -1, a disc of
// radius rho when Delta == -1 (tolerance 1e-12), divergent otherwise.
ConvergenceClass convergence(const FWParams& params);

// ln U_k of the normalized series, computed entirely in log space.
double log_coefficient(const FWParams& params, int k);

// U_k itself.  Throws std::range_error when exp(ln U_k) would overflow.
double coefficient(const FWParams& params, int k);

// U_0 ... U_{len-1} in log form.
CoefficientWindow coefficient_window(const FWParams& params, int len);

// The raw series pPsi_q(z) = sum_k prod Gamma(a_i + k A_i) / prod Gamma(b_j + k B_j) * z^k / k!.
std::complex<double> eval_fox_wright(const FWParams& params, std::complex<double> z,
                                     const SeriesControl& ctl = {});

// Normalized form f(z) = sum_k U_k z^(k+1); f(0) = 0, f'(0) = 1.
std::complex<double> eval_normalized(const FWParams& params, std::complex<double> z,
                                     const SeriesControl& ctl = {});

// f(z)/z = sum_k U_k z^k, summed directly (no division by z).
std::complex<double> eval_normalized_over_z(const FWParams& params, std::complex<double> z,
                                            const SeriesControl& ctl = {});

// Term-wise derivative of the normalized form; order is 1 or 2.
std::complex<double> eval_derivative(const FWParams& params, std::complex<double> z, int order,
                                     const SeriesControl& ctl = {});

// pFq(a; b; z) = [prod Gamma(b) / prod Gamma(a)] * pPsi_q with unit weights.
std::complex<double> eval_hypergeometric(const std::vector<double>& upper_a,
                                         const std::vector<double>& lower_b,
                                         std::complex<double> z,
                                         const SeriesControl& ctl = {});

// Parameters reproducing K1[(a_i); z] = sum_k prod(a_i/(a_i+k)) z^(k+1)/k!
// under eval_normalized: upper = [(a_i, 1)], lower = [(a_i + 1, 1)].
FWParams make_K_params(const std::vector<double>& a_list);

// A normalized power series f(z) = sum_k c_k z^(k+1) with a coefficient table
// held in sign/log-magnitude form.  Backed either by Fox-Wright parameters
// (table extends on demand, c_k = U_k > 0) or by an explicit finite
// coefficient list (polynomials, test functions).  Not thread-safe: the
// Fox-Wright table grows lazily.
class NormalizedSeries {
 public:
  static NormalizedSeries fox_wright(const FWParams& params, const SeriesControl& ctl = {});
  static NormalizedSeries from_coefficients(std::vector<double> coeffs);

  // f/z and its first two derivatives bundled: g = f/z, zg1 = z g'(z),
  // z2g2 = z^2 g''(z).  Everything geometry needs is a combination of these,
  // so no evaluation ever divides by z.
  struct Jet {
    std::complex<double> g;
    std::complex<double> zg1;
    std::complex<double> z2g2;
  };

  Jet jet(std::complex<double> z) const;

  // Fixed-radius view: the signed term magnitudes c_k r^k, truncated by the
  // stopping rule at radius r.  One slice serves every angle on the circle.
  class RadialSlice {
   public:
    Jet at_angle(double theta) const;
    int terms() const { return static_cast<int>(weights_.size()); }

   private:
    friend class NormalizedSeries;
    std::vector<double> weights_;  // c_k r^k
  };

  RadialSlice at_radius(double r) const;

 private:
  NormalizedSeries() = default;

  // Ensures the table holds at least n coefficients (Fox-Wright backing only).
  void extend(int n) const;
  int truncation_for(double r) const;

  bool finite_ = true;
  std::vector<ParamPair> upper_, lower_;  // parameter copy (Fox-Wright backing)
  SeriesControl ctl_;
  mutable std::vector<double> log_mag_;  // ln |c_k|
  mutable std::vector<double> sign_;     // -1, 0, +1
};

}  // namespace fw

#endif  // FOXWRIGHT_SERIES_HPP
