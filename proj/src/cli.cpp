#include "foxwright/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <complex>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "foxwright/criteria.hpp"
#include "foxwright/errors.hpp"
#include "foxwright/geometry.hpp"
#include "foxwright/params.hpp"
#include "foxwright/report_io.hpp"
#include "foxwright/series.hpp"

namespace fw::cli {
namespace {

struct CommonOptions {
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  double tol = 1e-14;
  int max_terms = 10000;
  int grid_radii = 64;
  int grid_angles = 256;
  int prefix_len = 200;
  bool csv = false;
  bool assert_h_nonneg = false;
};

double parse_double_token(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected a number, got '" + tok + "'");
  }
  if (used != tok.size())
    throw std::invalid_argument(what + ": trailing characters in '" + tok + "'");
  return v;
}

std::vector<ParamPair> parse_pair_list(const std::vector<std::string>& raw, const char* what) {
  std::vector<ParamPair> pairs;
  pairs.reserve(raw.size());
  for (const std::string& item : raw) {
    const std::size_t comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument(std::string(what) + ": expected 'value,weight', got '" + item + "'");
    pairs.push_back({parse_double_token(item.substr(0, comma), what),
                     parse_double_token(item.substr(comma + 1), what)});
  }
  return pairs;
}

FWParams params_from(const CommonOptions& opt) {
  return FWParams(parse_pair_list(opt.upper, "--upper"), parse_pair_list(opt.lower, "--lower"));
}

SeriesControl control_from(const CommonOptions& opt) {
  SeriesControl ctl;
  ctl.tol = opt.tol;
  ctl.max_terms = opt.max_terms;
  ctl.validate();
  return ctl;
}

DiscGrid grid_from(const CommonOptions& opt) {
  return DiscGrid::geometric(opt.grid_radii, opt.grid_angles);
}

std::complex<double> parse_z(const std::string& raw) {
  const std::size_t comma = raw.find(',');
  if (comma == std::string::npos) return {parse_double_token(raw, "--z"), 0.0};
  if (raw.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("--z: expected 're' or 're,im'");
  return {parse_double_token(raw.substr(0, comma), "--z"),
          parse_double_token(raw.substr(comma + 1), "--z")};
}

void print_complex(std::ostream& out, std::complex<double> v, bool force_pair) {
  if (!force_pair && v.imag() == 0.0)
    out << format_g17(v.real()) << '\n';
  else
    out << '(' << format_g17(v.real()) << ", " << format_g17(v.imag()) << ")\n";
}

int exit_code_for(const std::vector<CriterionVerdict>& verdicts) {
  for (CriterionVerdict v : verdicts)
    if (v != CriterionVerdict::Pass) return 1;
  return 0;
}

CriterionId criterion_arg(const std::string& name) {
  const std::optional<CriterionId> id = criterion_from_string(name);
  if (!id) throw std::invalid_argument("unknown criterion '" + name + "'");
  return *id;
}

FWParams apply_augment(const FWParams& params, const std::string& augment) {
  if (augment.empty() || augment == "none") return params;
  if (augment == "t3") return t3_augmented_params(params);
  if (augment == "t8") return t8_augmented_params(params);
  throw std::invalid_argument("--augment must be one of none, t3, t8");
}

PropertyReport run_verify(const FWParams& params, PropertyKind kind, const DiscGrid& grid,
                          double radius, int prefix_len, const SeriesControl& ctl) {
  if (kind.tag == PropertyKind::Tag::Subordinating) {
    const std::vector<double> seq = t3_subordinating_sequence(params, prefix_len);
    return subordinating_check(seq, grid, prefix_len);
  }
  const NormalizedSeries series = NormalizedSeries::fox_wright(params, ctl);
  return verify_property(series, kind, grid, radius);
}

// Scan execution shared by the `scan` subcommand's job runner.
std::vector<ScanRow> run_scan(const FWParams& base, const ScanAction& scan) {
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(scan.steps));
  for (int i = 0; i < scan.steps; ++i) {
    const double value = scan.lo + (scan.hi - scan.lo) * i / (scan.steps - 1);
    std::vector<ParamPair> up = base.upper(), lo = base.lower();
    std::vector<ParamPair>& row = scan.variable.upper ? up : lo;
    ParamPair& pp = row.at(scan.variable.index);
    (scan.variable.weight ? pp.weight : pp.value) = value;
    const FWParams modified(std::move(up), std::move(lo));

    double margin = 0.0;
    bool pass = false;
    switch (scan.criterion) {
      case CriterionId::T8_INEQ:
      case CriterionId::TY8_INEQ: {
        double rho;
        if (scan.rho) {
          rho = *scan.rho;
        } else {
          const ConvergenceClass cc = convergence(modified);
          if (cc.verdict != ConvergenceVerdict::Disc)
            throw std::invalid_argument(
                "scan: rho must be supplied for T8_INEQ/TY8_INEQ unless the series is Disc type");
          rho = cc.rho;
        }
        std::tie(pass, margin) = coefficient_inequality(scan.criterion, modified, rho);
        break;
      }
      case CriterionId::TT9_INEQ:
      case CriterionId::RRR1_INEQ:
        std::tie(pass, margin) = coefficient_inequality(scan.criterion, modified, 1.0);
        break;
      default: {
        const CriterionReport report = check_theorem(scan.criterion, modified);
        margin = std::numeric_limits<double>::infinity();
        for (const HypothesisCheck& check : report.checks) margin = std::min(margin, check.margin);
        pass = report.overall == CriterionVerdict::Pass;
        break;
      }
    }
    rows.push_back({value, margin, pass});
  }
  return rows;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fox-Wright function evaluation and geometric-property checks"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto add_common = [&](CLI::App* cmd, bool with_params) {
    if (with_params) {
      cmd->add_option("--upper", opt.upper, "upper pair 'a,A' (repeatable)")
          ->allow_extra_args(false);
      cmd->add_option("--lower", opt.lower, "lower pair 'b,B' (repeatable)")
          ->allow_extra_args(false);
    }
    cmd->add_option("--tol", opt.tol, "series truncation tolerance");
    cmd->add_option("--max-terms", opt.max_terms, "series term budget");
    cmd->add_option("--grid-radii", opt.grid_radii, "number of grid radii");
    cmd->add_option("--grid-angles", opt.grid_angles, "angles per radius");
    cmd->add_option("--prefix-len", opt.prefix_len, "sequence prefix length");
    cmd->add_flag("--csv", opt.csv, "emit CSV instead of a report");
    cmd->add_flag("--assert-h-nonneg", opt.assert_h_nonneg,
                  "assert H-function non-negativity (T8_INEQ/TY8_INEQ)");
  };

  // eval
  std::string z_raw;
  bool raw_series = false;
  int deriv_order = 0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate the normalized function at z");
  add_common(eval, true);
  eval->add_option("--z", z_raw, "evaluation point 're' or 're,im'")->required();
  eval->add_flag("--raw", raw_series, "evaluate the raw series instead of the normalized form");
  eval->add_option("--deriv", deriv_order, "order of the derivative (1 or 2)");

  // coeffs
  int coeff_count = 0;
  CLI::App* coeffs = app.add_subcommand("coeffs", "print normalized coefficients U_0..U_N");
  add_common(coeffs, true);
  coeffs->add_option("--n", coeff_count, "largest index N")->required();

  // check
  std::vector<std::string> criterion_names;
  std::optional<double> rho_flag;
  CLI::App* check = app.add_subcommand("check", "evaluate criterion hypothesis checklists");
  add_common(check, true);
  check->add_option("criteria", criterion_names, "criterion ids")->required();
  check->add_option("--rho", rho_flag, "exponential rate for T8_INEQ/TY8_INEQ");

  // verify
  std::string property_name, augment;
  double domain_radius = 1.0;
  std::optional<double> c_flag;
  CLI::App* verify = app.add_subcommand("verify", "verify a property on the disc grid");
  add_common(verify, true);
  verify->add_option("property", property_name, "property kind")->required();
  verify->add_option("--radius", domain_radius, "domain radius (1 or 0.5)");
  verify->add_option("--c", c_flag, "margin offset for re-over-z/deriv-dist/ratio-dist");
  verify->add_option("--augment", augment, "evaluate an augmented form: none, t3, t8");

  // scan
  std::string job_path;
  CLI::App* scan = app.add_subcommand("scan", "run a job file; scans emit CSV");
  add_common(scan, false);
  scan->add_option("job", job_path, "job file path")->required();

  // thresholds
  std::string threshold_kind;
  double threshold_a = 1.0;
  CLI::App* thresholds = app.add_subcommand("thresholds", "closed-form parameter thresholds");
  thresholds->add_option("kind", threshold_kind, "C2, K1_CONST or FINAL_STARLIKE")->required();
  thresholds->add_option("a", threshold_a, "parameter a (ignored for K1_CONST)");

  // example
  double ex_alpha = 0.0, ex_beta = 0.0, ex_gamma = 0.0;
  std::string ex_check;
  CLI::App* example = app.add_subcommand("example", "build the (alpha, beta, gamma) family");
  example->add_option("alpha", ex_alpha)->required();
  example->add_option("beta", ex_beta)->required();
  example->add_option("gamma", ex_gamma)->required();
  example->add_option("--check", ex_check, "run this criterion with rho = rho1");
  example->add_flag("--assert-h-nonneg", opt.assert_h_nonneg,
                    "assert H-function non-negativity (T8_INEQ/TY8_INEQ)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      const FWParams params = params_from(opt);
      const SeriesControl ctl = control_from(opt);
      const std::complex<double> z = parse_z(z_raw);
      std::complex<double> value;
      if (deriv_order != 0) {
        if (raw_series) throw std::invalid_argument("--deriv applies to the normalized form only");
        value = eval_derivative(params, z, deriv_order, ctl);
      } else if (raw_series) {
        value = eval_fox_wright(params, z, ctl);
      } else {
        value = eval_normalized(params, z, ctl);
      }
      print_complex(out, value, z.imag() != 0.0);
      return 0;
    }

    if (*coeffs) {
      const FWParams params = params_from(opt);
      if (coeff_count < 0) throw std::invalid_argument("--n must be non-negative");
      const CoefficientWindow window = coefficient_window(params, coeff_count + 1);
      if (opt.csv) out << "k,U_k,ln_U_k\n";
      for (std::size_t k = 0; k < window.length(); ++k) {
        const double lg = window.log_values[k];
        if (opt.csv)
          out << k << ',' << format_g17(std::exp(lg)) << ',' << format_g17(lg) << '\n';
        else
          out << "U_" << k << " = " << format_g17(std::exp(lg)) << "  (ln = " << format_g17(lg)
              << ")\n";
      }
      return 0;
    }

    if (*check) {
      const FWParams params = params_from(opt);
      std::vector<CriterionVerdict> verdicts;
      if (opt.csv) out << "criterion,check,holds,margin\n";
      for (const std::string& name : criterion_names) {
        const CriterionReport report =
            check_theorem(criterion_arg(name), params, opt.assert_h_nonneg, rho_flag);
        out << (opt.csv ? criterion_report_csv(report) : render_criterion_report(report));
        verdicts.push_back(report.overall);
      }
      return exit_code_for(verdicts);
    }

    if (*verify) {
      const FWParams params = apply_augment(params_from(opt), augment);
      std::optional<PropertyKind> kind = property_kind_from_string(property_name);
      if (!kind) throw std::invalid_argument("unknown property '" + property_name + "'");
      if (c_flag) kind->c = *c_flag;
      const DiscGrid grid = grid_from(opt);
      const PropertyReport report =
          run_verify(params, *kind, grid, domain_radius, opt.prefix_len, control_from(opt));
      if (opt.csv) out << "kind,radius,min_margin,witness_re,witness_im,pass,checked,skipped\n";
      out << (opt.csv ? property_report_csv(report) : render_property_report(report, grid));
      return report.pass ? 0 : 1;
    }

    if (*scan) {
      std::ifstream file(job_path);
      if (!file) throw std::invalid_argument("cannot open job file '" + job_path + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      const JobSpec job = parse_job(buffer.str());

      bool any_failed = false;
      for (const JobAction& action : job.actions) {
        if (const ScanAction* s = std::get_if<ScanAction>(&action)) {
          const std::vector<ScanRow> rows = run_scan(job.params, *s);
          out << write_scan_csv(rows, s->variable.name() + ",margin,pass");
        } else if (const CheckAction* c = std::get_if<CheckAction>(&action)) {
          const CriterionReport report =
              check_theorem(c->id, job.params, c->assert_h_nonneg, c->rho);
          out << (opt.csv ? criterion_report_csv(report) : render_criterion_report(report));
          any_failed = any_failed || report.overall != CriterionVerdict::Pass;
        } else if (const VerifyAction* v = std::get_if<VerifyAction>(&action)) {
          DiscGrid grid = DiscGrid::geometric(v->grid_radii.value_or(opt.grid_radii),
                                              v->grid_angles.value_or(opt.grid_angles));
          const PropertyReport report =
              run_verify(job.params, v->kind, grid, v->domain_radius,
                         v->prefix_len.value_or(opt.prefix_len), control_from(opt));
          out << (opt.csv ? property_report_csv(report) : render_property_report(report, grid));
          any_failed = any_failed || !report.pass;
        }
      }
      return any_failed ? 1 : 0;
    }

    if (*thresholds) {
      ThresholdKind kind;
      if (threshold_kind == "C2")
        kind = ThresholdKind::C2;
      else if (threshold_kind == "K1_CONST")
        kind = ThresholdKind::K1_CONST;
      else if (threshold_kind == "FINAL_STARLIKE")
        kind = ThresholdKind::FINAL_STARLIKE;
      else
        throw std::invalid_argument("unknown threshold kind '" + threshold_kind + "'");
      out << format_g17(corollary_threshold(kind, threshold_a)) << '\n';
      return 0;
    }

    if (*example) {
      const ExampleFamily family = build_example_params(ex_alpha, ex_beta, ex_gamma);
      auto print_row = [&](const char* name, const std::vector<ParamPair>& row) {
        out << name << " =";
        for (const ParamPair& pp : row)
          out << " [" << format_g17(pp.value) << ", " << format_g17(pp.weight) << "]";
        out << '\n';
      };
      print_row("upper", family.params.upper());
      print_row("lower", family.params.lower());
      out << "rho1 = " << format_g17(family.rho1) << '\n';
      if (!ex_check.empty()) {
        const CriterionId id = criterion_arg(ex_check);
        const std::optional<double> rho_for =
            (id == CriterionId::T8_INEQ || id == CriterionId::TY8_INEQ)
                ? std::optional<double>(family.rho1)
                : std::nullopt;
        const CriterionReport report =
            check_theorem(id, family.params, opt.assert_h_nonneg, rho_for);
        out << render_criterion_report(report);
        return report.overall == CriterionVerdict::Pass ? 0 : 1;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace fw::cli
