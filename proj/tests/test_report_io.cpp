#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "foxwright/criteria.hpp"
#include "foxwright/errors.hpp"
#include "foxwright/report_io.hpp"

using namespace fw;

TEST_CASE("parse_job minimal file") {
  const JobSpec job = parse_job(
      "# one pair, one action\n"
      "upper = [1, 1]\n"
      "lower = [2, 1]\n"
      "action = check T1_CASE1\n");
  CHECK(job.params.p() == 1);
  CHECK(job.params.q() == 1);
  REQUIRE(job.actions.size() == 1);
  const CheckAction& action = std::get<CheckAction>(job.actions[0]);
  CHECK(action.id == CriterionId::T1_CASE1);
  CHECK_FALSE(action.assert_h_nonneg);
}

TEST_CASE("parse_job rejects negative weights by naming the invariant") {
  try {
    parse_job("upper = [1, -1]\naction = check T2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("positive") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("parse_job scan action") {
  const JobSpec job = parse_job(
      "upper = [1, 1]\n"
      "lower = [2, 1]\n"
      "action = scan b1 1.5 3.5 20 TT9_INEQ\n");
  const ScanAction& scan = std::get<ScanAction>(job.actions[0]);
  CHECK(scan.variable.name() == "b1");
  CHECK(scan.lo == 1.5);
  CHECK(scan.hi == 3.5);
  CHECK(scan.steps == 20);
  CHECK(scan.criterion == CriterionId::TT9_INEQ);
}

TEST_CASE("parse_job verify action with options") {
  const JobSpec job = parse_job(
      "upper = [1, 1]\n"
      "lower = [2, 1]\n"
      "action = verify re-over-z c 0.5 radius 1 angles 128\n");
  const VerifyAction& verify = std::get<VerifyAction>(job.actions[0]);
  CHECK(verify.kind.tag == PropertyKind::Tag::ReOverZ);
  CHECK(verify.kind.c == 0.5);
  CHECK(verify.domain_radius == 1.0);
  CHECK(verify.grid_angles == 128);
  CHECK_FALSE(verify.grid_radii.has_value());
}

TEST_CASE("parse_job error paths") {
  CHECK_THROWS_AS(parse_job("upper = [1, 1]\n"), ParseError);                 // no action
  CHECK_THROWS_AS(parse_job("color = red\naction = check T2\n"), ParseError);  // unknown key
  CHECK_THROWS_AS(parse_job("upper = [1 1]\naction = check T2\n"), ParseError);
  CHECK_THROWS_AS(parse_job("action = check NOT_A_CRITERION\n"), ParseError);
  CHECK_THROWS_AS(parse_job("action = scan b1 1 2 1 TT9_INEQ\n"), ParseError);  // steps < 2
  CHECK_THROWS_AS(parse_job("action = scan q1 1 2 5 TT9_INEQ\n"), ParseError);  // bad variable
  CHECK_THROWS_AS(parse_job("upper = [1,1]\nupper = [1,1]\naction = check T2\n"), ParseError);
  CHECK_THROWS_AS(parse_job("action = scan b1 1 2 5 TT9_INEQ\n"), ParseError);  // out of range
  CHECK_THROWS_AS(parse_job("action = frobnicate\n"), ParseError);
}

TEST_CASE("parse_job surfaces only ParseError on mutated input") {
  const std::string base =
      "upper = [1, 1]\n"
      "lower = [2, 1]\n"
      "action = check T1_CASE1\n"
      "action = scan b1 1.5 3.5 20 TT9_INEQ\n";
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pos(0, static_cast<int>(base.size()) - 1);
  std::uniform_int_distribution<int> printable(32, 126);
  for (int i = 0; i < 500; ++i) {
    std::string mutated = base;
    for (int m = 0; m < 3; ++m)
      mutated[static_cast<std::size_t>(pos(rng))] = static_cast<char>(printable(rng));
    try {
      parse_job(mutated);
    } catch (const ParseError&) {
      // fine: rejected with line context
    }
  }
  CHECK(parse_job(base).actions.size() == 2);
  CHECK_THROWS_AS(parse_job("action = scan a99999999999999999999 1 2 5 TT9_INEQ\n"), ParseError);
}

TEST_CASE("write_scan_csv basics") {
  const std::vector<ScanRow> rows{{2.0, 0.25, true}};
  CHECK(write_scan_csv(rows, "b1,margin,pass") == "b1,margin,pass\n2,0.25,true\n");
  CHECK_THROWS_AS(write_scan_csv(std::vector<ScanRow>{}, "h"), std::invalid_argument);
}

TEST_CASE("write_scan_csv orders rows by scan value") {
  const std::vector<ScanRow> rows{{3.0, -0.5, false}, {1.0, 0.5, true}, {2.0, 0.1, true}};
  const std::string csv = write_scan_csv(rows, "x,margin,pass");
  const std::size_t p1 = csv.find("\n1,");
  const std::size_t p2 = csv.find("\n2,");
  const std::size_t p3 = csv.find("\n3,");
  CHECK(p1 < p2);
  CHECK(p2 < p3);
}

TEST_CASE("CSV round-trips doubles bit-exactly at 17 significant digits") {
  std::vector<ScanRow> rows;
  std::mt19937_64 bits(424242);
  for (int i = 0; i < 200; ++i) {
    const double v = std::ldexp(static_cast<double>(bits() >> 11), -52) + i;
    const double m = std::ldexp(static_cast<double>(bits() >> 11), -60) - 0.5;
    rows.push_back({v, m, (i % 3) == 0});
  }
  const std::string csv = write_scan_csv(rows, "value,margin,pass");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  std::vector<ScanRow> parsed;
  while (std::getline(in, line)) {
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    parsed.push_back({std::strtod(line.substr(0, c1).c_str(), nullptr),
                      std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr),
                      line.substr(c2 + 1) == "true"});
  }
  REQUIRE(parsed.size() == rows.size());
  std::vector<ScanRow> expected = rows;
  std::stable_sort(expected.begin(), expected.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.value < b.value; });
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].value == expected[i].value);
    CHECK(parsed[i].margin == expected[i].margin);
    CHECK(parsed[i].pass == expected[i].pass);
  }
}

TEST_CASE("report rendering carries verdicts and margins") {
  const CriterionReport report =
      check_theorem(CriterionId::T1_CASE1, FWParams({{1, 1}}, {{2, 1}}));
  const std::string text = render_criterion_report(report);
  CHECK(text.find("T1_CASE1") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("margin") != std::string::npos);
  const std::string csv = criterion_report_csv(report);
  CHECK(csv.find("T1_CASE1,") == 0);
}
