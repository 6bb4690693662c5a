#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lensroots/mixed_polynomial.hpp"
#include "lensroots/real_polynomial.hpp"

namespace lensroots {

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Box {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  bool contains(const Box& o) const { return x0 <= o.x0 && o.x1 <= x1 && y0 <= o.y0 && o.y1 <= y1; }
  bool touches(const Box& o) const { return !(o.x1 < x0 || x1 < o.x0 || o.y1 < y0 || y1 < o.y0); }
  /// Half-open membership: high edges are excluded.
  bool owns(Complex z) const { return x0 <= z.real() && z.real() < x1 && y0 <= z.imag() && z.imag() < y1; }
  static Box square(double r) { return {-r, r, -r, r}; }
  auto operator<=>(const Box&) const = default;
};

/// Unresolved clusters narrower than this fraction of the domain are treated
/// as one multiple root however many boxes they hold.
inline constexpr double kPointClusterDiameter = 1e-6;

struct SolverConfig {
  double tol = 1e-10;
  int max_depth = 60;
  /// Count non-simple roots by |multiplicity| instead of flagging the count.
  bool count_multiplicity = false;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Subdivision stops once a level has more live boxes than this.
  std::size_t max_frontier = 1u << 15;
  /// Connected unresolved regions larger than this signal a curve of zeros.
  std::size_t chain_threshold = 100;
};

/// A simple root: the closed disk (center, radius) contains exactly this root
/// and `uniqueness` contains no other.
struct CertifiedRoot {
  Complex center;
  double radius = 0.0;
  int orientation = 0;  ///< sign of J(g, h)
  double residual = 0.0;
  int multiplicity = 1;  ///< local index; equals orientation here
  Box enclosure;
  Box uniqueness;
};

/// A non-simple root. `exact` roots are located exactly (f(center) == 0 in
/// exact arithmetic) and certified isolated in the disk; inexact ones are
/// clusters of unresolved boxes with the winding number around them.
struct MultipleRoot {
  Complex center;
  double radius = 0.0;
  int multiplicity = 0;
  bool exact = false;
};

struct RootInventory {
  Box domain;
  std::vector<CertifiedRoot> roots;
  std::vector<MultipleRoot> multiple_roots;
  std::vector<Box> unresolved_boxes;
  /// Simple roots, plus |multiplicity| of non-simple ones when counting them.
  int rho = 0;
  /// Sum of local indices: orientations of simple roots plus multiplicities.
  int signed_sum = 0;
  /// rho without a root lying exactly at z = 0 (f has zero constant term).
  int rho_nonzero = 0;
  /// No unresolved region left (or all of them counted by multiplicity).
  bool certified = false;
  bool all_simple = true;
  std::size_t boxes_processed = 0;
};

/// Radius R such that f has no root with |z| >= R. Throws NotAdmissible.
double root_bound(const MixedPolynomial& f);

/// Lower bound of min |h(e^{i theta})| for a homogeneous mixed polynomial h;
/// returns 0 when no positive bound is found.
double circle_min_lower_bound(const MixedPolynomial& h);

/// Isolation certificate for a root at exactly `alpha` = 0 that is not a
/// nondegenerate simple root: disk radius plus local index.
std::optional<MultipleRoot> certify_exact_origin_root(const MixedPolynomial& f);

RootInventory isolate_roots(const MixedPolynomial& f, const Box& box, const SolverConfig& cfg = {});

/// Isolation on a square containing every root; requires admissibility.
RootInventory solve(const MixedPolynomial& f, const SolverConfig& cfg = {});

/// Certified rho(f); throws UncertifiedCount if anything stayed unresolved
/// or a non-exact multiple root was found without count_multiplicity.
int rho(const MixedPolynomial& f, const SolverConfig& cfg = {});
int rho(const MixedPolynomial& f, const Box& box, const SolverConfig& cfg = {});

/// One damped Newton iteration sequence on the realified system; returns the
/// converged point, if any.
std::optional<Complex> newton_refine(const MixedPolynomial& f, Complex z0, int max_iter = 30);

// Interval building blocks, exposed for testing.

struct KrawczykResult {
  enum class Status { Contained, Empty, Inconclusive };
  Status status = Status::Inconclusive;
  Interval kx, ky;
};

/// Krawczyk operator of the realified pair on `box`, centred at the box
/// midpoint.
KrawczykResult krawczyk(const IntervalPair& p, const Box& box);

/// Interval enclosures of (g, h) over a box.
std::pair<Interval, Interval> range_over(const IntervalPair& p, const Box& box);

}  // namespace lensroots
