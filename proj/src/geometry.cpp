#include "foxwright/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fw {
namespace {

constexpr double kPassTol = -1e-9;       // min margin admitting roundoff
constexpr double kDenominatorTol = 1e-13;

double margin_of(PropertyKind kind, std::complex<double> z, const NormalizedSeries::Jet& jet,
                 bool& skipped) {
  skipped = false;
  // f = z g, f' = g + z g', z f'' = 2 z g' + z^2 g''; every margin below is a
  // combination of g, z g' and z^2 g'', so nothing divides by z.
  const std::complex<double> g = jet.g;
  const std::complex<double> fp = jet.g + jet.zg1;
  switch (kind.tag) {
    case PropertyKind::Tag::Starlike: {
      if (std::abs(z * g) < kDenominatorTol) {
        skipped = true;
        return 0.0;
      }
      return (1.0 + jet.zg1 / g).real();  // z f'/f = 1 + z g'/g
    }
    case PropertyKind::Tag::Convex: {
      if (std::abs(fp) < kDenominatorTol) {
        skipped = true;
        return 0.0;
      }
      return (1.0 + (2.0 * jet.zg1 + jet.z2g2) / fp).real();
    }
    case PropertyKind::Tag::CloseToConvexLog:
      return ((1.0 - z) * fp).real();
    case PropertyKind::Tag::ReOverZ:
      return g.real() - kind.c;
    case PropertyKind::Tag::DerivDist:
      return kind.c - std::abs(fp - 1.0);
    case PropertyKind::Tag::RatioDist:
      return kind.c - std::abs(g - 1.0);
    case PropertyKind::Tag::Subordinating:
      return g.real();  // margin series is evaluated directly as g
  }
  return 0.0;
}

}  // namespace

DiscGrid DiscGrid::geometric(int n_radii, int angles, double max_radius) {
  if (n_radii < 1) throw std::invalid_argument("DiscGrid: need at least one radius");
  DiscGrid grid;
  grid.angles_per_radius = angles;
  grid.max_radius = max_radius;
  grid.radii.reserve(static_cast<std::size_t>(n_radii));
  const double r0 = 0.05;
  if (n_radii == 1) {
    grid.radii.push_back(max_radius);
  } else {
    const double step = std::log(max_radius / r0) / (n_radii - 1);
    for (int i = 0; i < n_radii; ++i) grid.radii.push_back(r0 * std::exp(step * i));
    grid.radii.back() = max_radius;  // guard the endpoint against rounding
  }
  grid.validate();
  return grid;
}

void DiscGrid::validate() const {
  if (radii.empty()) throw std::invalid_argument("DiscGrid: radii must be non-empty");
  if (angles_per_radius < 8) throw std::invalid_argument("DiscGrid: need at least 8 angles");
  if (!(max_radius > 0.0) || max_radius >= 1.0)
    throw std::invalid_argument("DiscGrid: max_radius must lie in (0, 1)");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || radii[i] >= 1.0 || (i > 0 && radii[i] <= radii[i - 1]))
      throw std::invalid_argument("DiscGrid: radii must be strictly increasing within (0, 1)");
  }
}

std::string PropertyKind::describe() const {
  switch (tag) {
    case Tag::Starlike: return "starlike";
    case Tag::Convex: return "convex";
    case Tag::CloseToConvexLog: return "close-to-convex wrt -log(1-z)";
    case Tag::ReOverZ: return "Re(f/z) > " + std::to_string(c);
    case Tag::DerivDist: return "|f' - 1| < " + std::to_string(c);
    case Tag::RatioDist: return "|f/z - 1| < " + std::to_string(c);
    case Tag::Subordinating: return "subordinating factor sequence";
  }
  return "?";
}

PropertyReport verify_property(const NormalizedSeries& f, PropertyKind kind, const DiscGrid& grid,
                               double domain_radius) {
  grid.validate();
  if (domain_radius != 1.0 && domain_radius != 0.5)
    throw std::invalid_argument("verify_property: domain radius must be 1 or 1/2");
  if ((kind.tag == PropertyKind::Tag::ReOverZ || kind.tag == PropertyKind::Tag::DerivDist ||
       kind.tag == PropertyKind::Tag::RatioDist) &&
      !(kind.c > 0.0))
    throw std::invalid_argument("verify_property: the margin offset c must be positive");

  PropertyReport report;
  report.kind = kind;
  report.domain_radius = domain_radius;
  report.min_margin = std::numeric_limits<double>::infinity();
  report.witness = 0.0;
  report.points_checked = 0;
  report.points_skipped = 0;

  const double r_cap = domain_radius * grid.max_radius;
  const double two_pi = 2.0 * std::numbers::pi;
  for (double r : grid.radii) {
    if (r > r_cap) break;
    const auto slice = f.at_radius(r);
    for (int j = 0; j < grid.angles_per_radius; ++j) {
      const double theta = two_pi * j / grid.angles_per_radius;
      const std::complex<double> z = std::polar(r, theta);
      bool skipped = false;
      const double margin = margin_of(kind, z, slice.at_angle(theta), skipped);
      if (skipped) {
        ++report.points_skipped;
        continue;
      }
      ++report.points_checked;
      if (margin < report.min_margin) {
        report.min_margin = margin;
        report.witness = z;
      }
    }
  }
  if (report.points_checked == 0)
    throw std::domain_error(
        "verify_property: no evaluable grid points (all skipped or none within the domain radius)");
  report.pass = report.min_margin >= kPassTol;
  return report;
}

std::optional<PropertyKind> property_kind_from_string(const std::string& name) {
  if (name == "starlike") return PropertyKind::starlike();
  if (name == "convex") return PropertyKind::convex();
  if (name == "ctc-log") return PropertyKind::close_to_convex_log();
  if (name == "re-over-z") return PropertyKind::re_over_z(0.5);
  if (name == "deriv-dist") return PropertyKind::deriv_dist(1.0);
  if (name == "ratio-dist") return PropertyKind::ratio_dist(2.0 / std::sqrt(5.0));
  if (name == "subordinating") return PropertyKind{PropertyKind::Tag::Subordinating, 0.0};
  return std::nullopt;
}

PropertyReport subordinating_check(std::span<const double> seq, const DiscGrid& grid,
                                   int prefix_len) {
  if (prefix_len < 8)
    throw std::invalid_argument("subordinating_check: prefix_len must be at least 8");
  if (static_cast<int>(seq.size()) < prefix_len)
    throw std::invalid_argument("subordinating_check: sequence shorter than prefix_len");

  // Margin series 1 + 2 sum_{k=1..prefix} alpha_k z^k as an explicit
  // coefficient table; its "g" evaluation is exactly the Wilf margin.
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(prefix_len) + 1);
  coeffs.push_back(1.0);
  for (int k = 0; k < prefix_len; ++k) coeffs.push_back(2.0 * seq[static_cast<std::size_t>(k)]);
  const NormalizedSeries margin_series = NormalizedSeries::from_coefficients(std::move(coeffs));

  PropertyReport report =
      verify_property(margin_series, {PropertyKind::Tag::Subordinating, 0.0}, grid, 1.0);
  return report;
}

}  // namespace fw
