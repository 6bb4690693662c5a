#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lensroots/interval.hpp"
#include "lensroots/mixed_polynomial.hpp"

namespace lensroots {

/// Sparse real polynomial in (x, y); key (i, j) is the monomial x^i y^j.
struct RealPolynomial2 {
  std::map<std::pair<int, int>, double> coeffs;

  double evaluate(double x, double y) const;
  int degree() const;
};

/// f(x + iy, x - iy) = g(x, y) + i h(x, y).
struct RealPair {
  RealPolynomial2 g;
  RealPolynomial2 h;
};

RealPair realify(const MixedPolynomial& f);

/// Dense bivariate polynomial with interval coefficients, total degree <= d.
class IntervalPolynomial2 {
 public:
  IntervalPolynomial2() = default;
  explicit IntervalPolynomial2(int degree)
      : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1) * (degree + 1), Interval(0.0)) {}

  int degree() const { return degree_; }
  Interval& at(int i, int j) { return coeffs_[static_cast<std::size_t>(i) * (degree_ + 1) + j]; }
  const Interval& at(int i, int j) const { return coeffs_[static_cast<std::size_t>(i) * (degree_ + 1) + j]; }

  /// Expansion about the point (cx, cy): coefficients of (x-cx)^i (y-cy)^j.
  IntervalPolynomial2 shifted(double cx, double cy) const;

  /// Range over [-rx, rx] x [-ry, ry] for a polynomial already centred on the
  /// box, together with the partial derivatives over the same box.
  Interval range_centered(double rx, double ry) const;
  Interval d_dx_range_centered(double rx, double ry) const;
  Interval d_dy_range_centered(double rx, double ry) const;

 private:
  int degree_ = 0;
  std::vector<Interval> coeffs_;
};

/// Outward-rounded enclosure of realify(f).
struct IntervalPair {
  IntervalPolynomial2 g;
  IntervalPolynomial2 h;
};

IntervalPair realify_interval(const MixedPolynomial& f);

}  // namespace lensroots
