#ifndef FOXWRIGHT_REPORT_IO_HPP
#define FOXWRIGHT_REPORT_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foxwright/criteria.hpp"
#include "foxwright/geometry.hpp"
#include "foxwright/params.hpp"

namespace fw {

struct CheckAction {
  CriterionId id;
  bool assert_h_nonneg = false;
  std::optional<double> rho;
};

struct VerifyAction {
  PropertyKind kind;
  double domain_radius = 1.0;
  std::optional<int> grid_radii;
  std::optional<int> grid_angles;
  std::optional<int> prefix_len;  // subordinating only
};

// Which scalar of the parameter tuple a scan varies: a3, A1, b2, B2, ...
struct ScanVariable {
  bool upper;   // a/A row vs b/B row
  bool weight;  // A/B vs a/b
  std::size_t index;  // 0-based pair index

  std::string name() const;
};

struct ScanAction {
  ScanVariable variable;
  double lo;
  double hi;
  int steps;  // number of samples, >= 2, endpoints included
  CriterionId criterion;
  std::optional<double> rho;
};

using JobAction = std::variant<CheckAction, VerifyAction, ScanAction>;

// A parsed job file: one parameter tuple plus at least one action.
struct JobSpec {
  FWParams params;
  std::vector<JobAction> actions;
};

// Parses the line-oriented job format (see README).  Throws ParseError with
// the offending line on malformed syntax, unknown keys or invariant
// violations.
JobSpec parse_job(std::string_view text);

struct ScanRow {
  double value;
  double margin;
  bool pass;
};

// Header line, then one "value,margin,pass" row per sample, floats printed
// with 17 significant digits, rows ordered by scan value, LF line endings.
std::string write_scan_csv(std::span<const ScanRow> rows, std::string_view header);

// 17-significant-digit rendering used for all numeric output.
std::string format_g17(double v);

// Human-readable report texts.
std::string render_criterion_report(const CriterionReport& report);
std::string render_property_report(const PropertyReport& report, const DiscGrid& grid);

// One CSV line per hypothesis check: criterion,check,holds,margin.
std::string criterion_report_csv(const CriterionReport& report);
// Single CSV record: kind,radius,min_margin,witness_re,witness_im,pass,checked,skipped.
std::string property_report_csv(const PropertyReport& report);

}  // namespace fw

#endif  // FOXWRIGHT_REPORT_IO_HPP
