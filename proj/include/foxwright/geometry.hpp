#ifndef FOXWRIGHT_GEOMETRY_HPP
#define FOXWRIGHT_GEOMETRY_HPP

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foxwright/series.hpp"

namespace fw {

// Polar sampling of the unit disc.  Verification at domain radius d uses the
// grid points r e^{i theta} with r <= d * max_radius, so the radius-1/2 point
// set is a subset of the radius-1 set.
struct DiscGrid {
  std::vector<double> radii;  // strictly increasing, all in (0, 1)
  int angles_per_radius = 256;
  double max_radius = 0.995;

  // n_radii geometrically spaced radii from 0.05 to max_radius.
  static DiscGrid geometric(int n_radii, int angles, double max_radius = 0.995);
  static DiscGrid standard() { return geometric(64, 256); }

  void validate() const;
};

// A pointwise margin whose positivity over the disc is the property:
//   Starlike          Re(z f'/f)
//   Convex            Re(1 + z f''/f')
//   CloseToConvexLog  Re((1-z) f')
//   ReOverZ(c)        Re(f/z) - c
//   DerivDist(c)      c - |f' - 1|
//   RatioDist(c)      c - |f/z - 1|
//   Subordinating     Re(1 + 2 sum alpha_k z^k)
struct PropertyKind {
  enum class Tag { Starlike, Convex, CloseToConvexLog, ReOverZ, DerivDist, RatioDist, Subordinating };
  Tag tag;
  double c = 0.0;

  static PropertyKind starlike() { return {Tag::Starlike, 0.0}; }
  static PropertyKind convex() { return {Tag::Convex, 0.0}; }
  static PropertyKind close_to_convex_log() { return {Tag::CloseToConvexLog, 0.0}; }
  static PropertyKind re_over_z(double c) { return {Tag::ReOverZ, c}; }
  static PropertyKind deriv_dist(double c) { return {Tag::DerivDist, c}; }
  static PropertyKind ratio_dist(double c) { return {Tag::RatioDist, c}; }

  std::string describe() const;
};

// Grid verdict for one property.  A failure is a certificate (the witness
// violates the margin); a pass is evidence over points_checked samples only.
struct PropertyReport {
  PropertyKind kind;
  double domain_radius;
  double min_margin;
  std::complex<double> witness;
  bool pass;  // min_margin >= -1e-9
  long points_checked;
  long points_skipped;  // denominator modulus below 1e-13
};

// Evaluates the margin of `kind` at every grid point with r <= domain_radius
// * grid.max_radius and reports the minimum.  domain_radius is 1 or 1/2.
PropertyReport verify_property(const NormalizedSeries& f, PropertyKind kind, const DiscGrid& grid,
                               double domain_radius);

// Wilf's criterion for a subordinating factor sequence: the margin
// Re(1 + 2 sum_{k<=prefix_len} alpha_k z^k) over the radius-1 grid.
PropertyReport subordinating_check(std::span<const double> seq, const DiscGrid& grid,
                                   int prefix_len);

// Names used on the CLI and in job files: starlike, convex, ctc-log,
// re-over-z, deriv-dist, ratio-dist, subordinating.  The parameterized kinds
// carry their lemma defaults (1/2, 1, 2/sqrt(5)).
std::optional<PropertyKind> property_kind_from_string(const std::string& name);

}  // namespace fw

#endif  // FOXWRIGHT_GEOMETRY_HPP
