#include "foxwright/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "foxwright/errors.hpp"

namespace fw {
namespace {

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

double parse_number(const std::string& tok, int line) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &consumed);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + tok + "'", line);
  }
  if (consumed != tok.size()) throw ParseError("trailing characters in number '" + tok + "'", line);
  if (!std::isfinite(v)) throw ParseError("number '" + tok + "' is not finite", line);
  return v;
}

int parse_count(const std::string& tok, int line) {
  const double v = parse_number(tok, line);
  if (v != std::floor(v) || v < 0 || v > 1e9)
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return static_cast<int>(v);
}

// A row literal is a sequence of bracketed pairs: [a, A] [a, A] ...
std::vector<ParamPair> parse_pairs(const std::string& value, int line) {
  std::vector<ParamPair> pairs;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos; };
  skip_ws();
  while (pos < value.size()) {
    if (value[pos] != '[') throw ParseError("expected '[' in pair list", line);
    const std::size_t close = value.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated '[' in pair list", line);
    std::string body = value.substr(pos + 1, close - pos - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("pair must be '[value, weight]'", line);
    std::string first = body.substr(0, comma), second = body.substr(comma + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    trim(first);
    trim(second);
    if (first.empty() || second.empty()) throw ParseError("pair must be '[value, weight]'", line);
    const double v = parse_number(first, line);
    const double w = parse_number(second, line);
    if (!(v > 0.0) || !(w > 0.0))
      throw ParseError("parameter values and weights must be positive", line);
    pairs.push_back({v, w});
    pos = close + 1;
    skip_ws();
  }
  return pairs;
}

CriterionId parse_criterion(const std::string& tok, int line) {
  const std::optional<CriterionId> id = criterion_from_string(tok);
  if (!id) throw ParseError("unknown criterion '" + tok + "'", line);
  return *id;
}

ScanVariable parse_scan_variable(const std::string& tok, int line) {
  if (tok.size() < 2) throw ParseError("scan variable must be one of a<i>, A<i>, b<i>, B<i>", line);
  const char c = tok[0];
  if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
    throw ParseError("scan variable must be one of a<i>, A<i>, b<i>, B<i>", line);
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("scan variable index must be a positive integer", line);
  int index = 0;
  try {
    index = std::stoi(tok.substr(1));
  } catch (const std::out_of_range&) {
    throw ParseError("scan variable index is out of range", line);
  }
  if (index < 1) throw ParseError("scan variable index must be a positive integer", line);
  ScanVariable var;
  var.upper = (c == 'a' || c == 'A');
  var.weight = (c == 'A' || c == 'B');
  var.index = static_cast<std::size_t>(index - 1);
  return var;
}

CheckAction parse_check_action(const std::vector<std::string>& tokens, int line) {
  if (tokens.size() < 2) throw ParseError("check action needs a criterion id", line);
  CheckAction action;
  action.id = parse_criterion(tokens[1], line);
  std::size_t i = 2;
  while (i < tokens.size()) {
    if (tokens[i] == "assert-h-nonneg") {
      action.assert_h_nonneg = true;
      ++i;
    } else if (tokens[i] == "rho") {
      if (i + 1 >= tokens.size()) throw ParseError("rho requires a value", line);
      action.rho = parse_number(tokens[i + 1], line);
      i += 2;
    } else {
      throw ParseError("unknown check option '" + tokens[i] + "'", line);
    }
  }
  return action;
}

VerifyAction parse_verify_action(const std::vector<std::string>& tokens, int line) {
  if (tokens.size() < 2) throw ParseError("verify action needs a property kind", line);
  VerifyAction action;
  const std::optional<PropertyKind> kind = property_kind_from_string(tokens[1]);
  if (!kind) throw ParseError("unknown property '" + tokens[1] + "'", line);
  action.kind = *kind;
  std::size_t i = 2;
  while (i < tokens.size()) {
    const std::string& opt = tokens[i];
    if (i + 1 >= tokens.size()) throw ParseError("option '" + opt + "' requires a value", line);
    const std::string& val = tokens[i + 1];
    if (opt == "c") {
      action.kind.c = parse_number(val, line);
    } else if (opt == "radius") {
      const double r = parse_number(val, line);
      if (r != 1.0 && r != 0.5) throw ParseError("radius must be 1 or 0.5", line);
      action.domain_radius = r;
    } else if (opt == "radii") {
      action.grid_radii = parse_count(val, line);
    } else if (opt == "angles") {
      action.grid_angles = parse_count(val, line);
    } else if (opt == "prefix") {
      action.prefix_len = parse_count(val, line);
    } else {
      throw ParseError("unknown verify option '" + opt + "'", line);
    }
    i += 2;
  }
  return action;
}

ScanAction parse_scan_action(const std::vector<std::string>& tokens, int line) {
  if (tokens.size() < 6)
    throw ParseError("scan action is 'scan <var> <lo> <hi> <steps> <criterion>'", line);
  ScanAction action;
  action.variable = parse_scan_variable(tokens[1], line);
  action.lo = parse_number(tokens[2], line);
  action.hi = parse_number(tokens[3], line);
  action.steps = parse_count(tokens[4], line);
  action.criterion = parse_criterion(tokens[5], line);
  if (action.steps < 2) throw ParseError("scan needs at least 2 steps", line);
  if (!(action.lo > 0.0) || !(action.hi > 0.0))
    throw ParseError("scan bounds must be positive (parameters are positive reals)", line);
  if (!(action.lo < action.hi)) throw ParseError("scan bounds must satisfy lo < hi", line);
  std::size_t i = 6;
  while (i < tokens.size()) {
    if (tokens[i] == "rho") {
      if (i + 1 >= tokens.size()) throw ParseError("rho requires a value", line);
      action.rho = parse_number(tokens[i + 1], line);
      i += 2;
    } else {
      throw ParseError("unknown scan option '" + tokens[i] + "'", line);
    }
  }
  return action;
}

}  // namespace

std::string ScanVariable::name() const {
  return std::string(1, upper ? (weight ? 'A' : 'a') : (weight ? 'B' : 'b')) +
         std::to_string(index + 1);
}

JobSpec parse_job(std::string_view text) {
  std::optional<std::vector<ParamPair>> upper, lower;
  std::vector<JobAction> actions;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;

    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    std::string key = raw.substr(0, eq);
    std::string value = raw.substr(eq + 1);
    {
      const auto b = key.find_first_not_of(" \t");
      const auto e = key.find_last_not_of(" \t");
      key = b == std::string::npos ? std::string() : key.substr(b, e - b + 1);
    }

    if (key == "upper" || key == "lower") {
      auto& slot = key == "upper" ? upper : lower;
      if (slot) throw ParseError("duplicate key '" + key + "'", line);
      slot = parse_pairs(value, line);
    } else if (key == "action") {
      const std::vector<std::string> tokens = tokenize(value);
      if (tokens.empty()) throw ParseError("empty action", line);
      if (tokens[0] == "check")
        actions.emplace_back(parse_check_action(tokens, line));
      else if (tokens[0] == "verify")
        actions.emplace_back(parse_verify_action(tokens, line));
      else if (tokens[0] == "scan")
        actions.emplace_back(parse_scan_action(tokens, line));
      else
        throw ParseError("unknown action '" + tokens[0] + "'", line);
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }

  if (actions.empty()) throw ParseError("job file must contain at least one action", line);
  try {
    JobSpec spec{FWParams(upper.value_or(std::vector<ParamPair>{}),
                          lower.value_or(std::vector<ParamPair>{})),
                 std::move(actions)};
    // Scan variables must address an existing pair.
    for (const JobAction& action : spec.actions) {
      if (const ScanAction* scan = std::get_if<ScanAction>(&action)) {
        const std::size_t row =
            scan->variable.upper ? spec.params.p() : spec.params.q();
        if (scan->variable.index >= row)
          throw ParseError("scan variable " + scan->variable.name() + " is out of range", line);
      }
    }
    return spec;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_criterion_report(const CriterionReport& report) {
  std::string out = "criterion ";
  out += to_string(report.id);
  out += ": ";
  switch (report.overall) {
    case CriterionVerdict::Pass: out += "PASS"; break;
    case CriterionVerdict::Fail: out += "FAIL"; break;
    case CriterionVerdict::ConditionalPass:
      out += "CONDITIONAL PASS (relies on asserted H-function non-negativity)";
      break;
  }
  out += '\n';
  for (const HypothesisCheck& check : report.checks) {
    out += check.holds ? "  [ok]   " : "  [FAIL] ";
    out += check.name;
    out += "  margin = ";
    out += format_g17(check.margin);
    out += '\n';
  }
  out += "  conclusion when hypotheses hold: " + report.conclusion + '\n';
  return out;
}

std::string render_property_report(const PropertyReport& report, const DiscGrid& grid) {
  std::string out = "property: " + report.kind.describe() + '\n';
  out += "domain radius: " + format_g17(report.domain_radius) +
         " (grid radii capped at " + format_g17(report.domain_radius * grid.max_radius) + ")\n";
  out += "grid: " + std::to_string(grid.radii.size()) + " radii x " +
         std::to_string(grid.angles_per_radius) + " angles; points checked: " +
         std::to_string(report.points_checked) + " (skipped: " +
         std::to_string(report.points_skipped) + ")\n";
  out += "min margin = " + format_g17(report.min_margin) + " at z = (" +
         format_g17(report.witness.real()) + ", " + format_g17(report.witness.imag()) + ")\n";
  out += std::string("verdict: ") + (report.pass ? "PASS" : "FAIL") + '\n';
  out += report.pass
             ? "note: a grid pass is sampling evidence, not a proof of the property.\n"
             : "note: the witness point is a certificate of failure.\n";
  return out;
}

std::string criterion_report_csv(const CriterionReport& report) {
  std::string out;
  for (const HypothesisCheck& check : report.checks) {
    out += to_string(report.id);
    out += ',';
    // Commas inside check names would break the record; names never use them.
    out += check.name;
    out += ',';
    out += check.holds ? "true" : "false";
    out += ',';
    out += format_g17(check.margin);
    out += '\n';
  }
  return out;
}

std::string property_report_csv(const PropertyReport& report) {
  std::string out = report.kind.describe();
  std::replace(out.begin(), out.end(), ',', ';');
  out += ',' + format_g17(report.domain_radius);
  out += ',' + format_g17(report.min_margin);
  out += ',' + format_g17(report.witness.real());
  out += ',' + format_g17(report.witness.imag());
  out += ',';
  out += report.pass ? "true" : "false";
  out += ',' + std::to_string(report.points_checked);
  out += ',' + std::to_string(report.points_skipped);
  out += '\n';
  return out;
}

std::string write_scan_csv(std::span<const ScanRow> rows, std::string_view header) {
  if (rows.empty()) throw std::invalid_argument("write_scan_csv: rows must be non-empty");
  if (header.empty()) throw std::invalid_argument("write_scan_csv: header must be non-empty");
  std::vector<ScanRow> ordered(rows.begin(), rows.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.value < b.value; });
  std::string out;
  out += header;
  out += '\n';
  for (const ScanRow& row : ordered) {
    out += format_g17(row.value);
    out += ',';
    out += format_g17(row.margin);
    out += ',';
    out += row.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace fw
