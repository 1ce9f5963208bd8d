#ifndef FOXWRIGHT_PARAMS_HPP
#define FOXWRIGHT_PARAMS_HPP

#include <cstddef>
#include <vector>

namespace fw {

// One (value, weight) pair of the Fox-Wright parameter tuple: (a_i, A_i) on
// the upper row, (b_j, B_j) on the lower row.
struct ParamPair {
  double value;
  double weight;
};

// Parameter tuple ((a_i, A_i))_i / ((b_j, B_j))_j of pPsi_q.  Restricted to
// positive reals; rows may be empty; row lengths capped at 16.
class FWParams {
 public:
  FWParams(std::vector<ParamPair> upper, std::vector<ParamPair> lower);

  const std::vector<ParamPair>& upper() const { return upper_; }
  const std::vector<ParamPair>& lower() const { return lower_; }
  std::size_t p() const { return upper_.size(); }
  std::size_t q() const { return lower_.size(); }

 private:
  std::vector<ParamPair> upper_;
  std::vector<ParamPair> lower_;
};

// Truncation contract for series evaluation: stop once |term| stays below
// tol * max(1, |partial sum|) for 3 consecutive indices k >= min_terms.
struct SeriesControl {
  double tol = 1e-14;
  int max_terms = 10000;
  int min_terms = 8;

  void validate() const;
};

enum class ConvergenceVerdict { Entire, Disc, Divergent };

// Delta/rho/mu classification of the defining series.  rho and mu always
// carry the formula values; they describe the radius and the boundary
// behaviour only when verdict == Disc.
struct ConvergenceClass {
  double delta;
  double rho;
  double mu;
  ConvergenceVerdict verdict;
  bool boundary_converges;  // mu > 1/2; meaningful for Disc only
};

// Finite prefix of the normalized coefficients U_k in log form.  All U_k are
// positive by construction, so the logs alone determine them.
struct CoefficientWindow {
  std::vector<double> log_values;  // ln U_0, ..., ln U_{n-1}; log_values[0] == 0
  std::size_t length() const { return log_values.size(); }
};

}  // namespace fw

#endif  // FOXWRIGHT_PARAMS_HPP
