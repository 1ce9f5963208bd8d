#ifndef FOXWRIGHT_CRITERIA_HPP
#define FOXWRIGHT_CRITERIA_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foxwright/params.hpp"

namespace fw {

// Identifiers of the checkable sufficient conditions.  T1_* / T2 / T3 are
// hypothesis checklists, H2 is the orderable-parameter surrogate for
// H-function non-negativity, *_INEQ are gamma-product coefficient
// inequalities.
enum class CriterionId {
  T1_CASE1,
  T1_CASE2,
  T1_CASE3,
  T2,
  T3,
  H2,
  T8_INEQ,
  TT9_INEQ,
  TY8_INEQ,
  RRR1_INEQ,
};

const char* to_string(CriterionId id);
std::optional<CriterionId> criterion_from_string(const std::string& name);

struct HypothesisCheck {
  std::string name;
  bool holds;
  double margin;  // how far inside the hypothesis the parameters sit
};

enum class CriterionVerdict { Pass, Fail, ConditionalPass };

// Per-criterion checklist.  overall == Pass only when every hypothesis is
// checkable and holds; ConditionalPass when the only unverified hypothesis is
// the caller-asserted H-function non-negativity flag.
struct CriterionReport {
  CriterionId id;
  std::vector<HypothesisCheck> checks;
  CriterionVerdict overall;
  std::string conclusion;
};

// Verdict for a finite-prefix sequence condition.  Indices are 1-based
// positions in the mathematical sequence.
struct SequenceVerdict {
  bool holds;
  std::optional<int> first_violation;
  int checked_prefix;
};

enum class OzakiChain { None, NondecreasingCapped, NonincreasingNonnegative, Both };

// Result of the close-to-convexity coefficient chain test: either
// 1 <= 2A_2 <= ... <= n A_n <= ... <= 2 or 1 >= 2A_2 >= ... >= n A_n >= ... >= 0.
struct OzakiVerdict {
  bool holds;
  OzakiChain chain;                    // which chain(s) hold over the prefix
  std::optional<int> first_violation;  // index n at which the last live chain died
  int checked_prefix;
};

// coeffs[0] = A_1 must equal 1; checks the two chains on s_n = n * coeffs[n-1]
// for n = 1..prefix_len with comparison tolerance 1e-12.
OzakiVerdict ozaki_check(std::span<const double> coeffs, int prefix_len);

// Evaluates every hypothesis of the given criterion as a named margin check.
// h_nonneg_asserted supplies the H-function non-negativity flag needed by
// T8_INEQ / TY8_INEQ; rho supplies the exponential rate for those two
// inequalities (defaults to the convergence radius when the series verdict is
// Disc, otherwise it must be given).
CriterionReport check_theorem(CriterionId id, const FWParams& params,
                              bool h_nonneg_asserted = false,
                              std::optional<double> rho = std::nullopt);

// The gamma-product inequality of the *_INEQ criteria:
//   prod_i [ G(a_i+A_i)/G(b_i+B_i) - G(a_i+2A_i)/(rho G(b_i+2B_i)) (1-e^rho) ]
//     <=  RHS,
// RHS = prod G(a_i)/G(b_i), scaled by 2/sqrt(5) for TY8/RRR1.  Returns
// (holds, margin) with margin = RHS - LHS.
std::pair<bool, double> coefficient_inequality(CriterionId id, const FWParams& params,
                                               double rho);

// psi00 - psi01/rho * (1 - e^(rho z)) with psi00 = prod G(a_i)/G(b_i),
// psi01 = prod G(a_i+A_i)/G(b_i+B_i) and rho from convergence(params).
double luke_upper_bound(const FWParams& params, double z);

enum class ThresholdKind { C2, K1_CONST, FINAL_STARLIKE };

// Closed-form parameter thresholds at which the TT9/RRR1 inequalities flip.
double corollary_threshold(ThresholdKind kind, double a);

// Sample of H(z) = G(a+Az)/G(b+Az) - G(a+A+Az)/G(b+A+Az) over a grid,
// together with non-negativity and monotonicity flags (tolerance 1e-12).
struct Lemma5Profile {
  std::vector<double> values;
  bool nonnegative;
  bool nonincreasing;
};

Lemma5Profile lemma5_profile(double a, double b, double A, std::span<const double> grid);

enum class SequenceCondition { LEMMA3, LEMMA4 };

// LEMMA3: {n a_n} and {n a_n - (n+1) a_{n+1}} both non-increasing.
// LEMMA4: b_k - b_{k+1} >= 0 and b_k - 2 b_{k+1} + b_{k+2} >= 0.
SequenceVerdict sequence_checks(SequenceCondition kind, std::span<const double> seq,
                                int prefix_len);

// The (alpha, beta, gamma) two-parameter family: p = q = 2 parameters
// (1,1), ((gamma+beta)/(alpha beta), 1/(2 alpha beta)) over
// (1+gamma/beta, 1/(2 alpha)), (1, 1/2), plus the rate rho1 used by its
// coefficient inequality.
struct ExampleFamily {
  FWParams params;
  double rho1;
};

ExampleFamily build_example_params(double alpha, double beta, double gamma);

// (1,1)-augmented parameter list ((1,1),(a_p,A_p)) / ((b_p,A_p)) used by the
// T3 half-plane bound.  Requires matching row lengths and common weights.
FWParams t3_augmented_params(const FWParams& params);

// (2,1)-augmented lower row, the function named by the T8/TT9 convexity
// conclusion.
FWParams t8_augmented_params(const FWParams& params);

// First len entries of the subordinating factor sequence certified by T3,
// i.e. the Wilf sequence of Re(f/z) > 1/2: alpha_k = U^(2)_{k+1}, k >= 1.
std::vector<double> t3_subordinating_sequence(const FWParams& params, int len);

// The decreasing chain certified by the T1 criteria: s_0 = 1 and
// s_k = k U_k for k >= 1.
std::vector<double> t1_chain_sequence(const FWParams& params, int len);

}  // namespace fw

#endif  // FOXWRIGHT_CRITERIA_HPP
