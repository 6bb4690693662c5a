#pragma once

// Closed double intervals with outward rounding. Every arithmetic result is
// computed in round-to-nearest and then widened by one ulp on each side,
// which encloses the exact result since the rounding error is at most half
// an ulp.

#include <algorithm>
#include <cmath>
#include <limits>

namespace lensroots {

inline double round_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double round_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr Interval(double v) : lo(v), hi(v) {}  // NOLINT: implicit point interval
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  double mid() const { return lo == hi ? lo : 0.5 * lo + 0.5 * hi; }
  double width() const { return hi - lo; }
  double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  bool strictly_inside(const Interval& outer) const { return outer.lo < lo && hi < outer.hi; }
  bool subset_of(const Interval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }

  // [-r, r] with r rounded up.
  static Interval symmetric(double r) { return {-r, r}; }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {round_down(a.lo + b.lo), round_up(a.hi + b.hi)};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {round_down(a.lo - b.hi), round_up(a.hi - b.lo)};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo == a.hi && b.lo == b.hi) {
      double p = a.lo * b.lo;
      if (p == 0.0 && (a.lo == 0.0 || b.lo == 0.0)) return {0.0, 0.0};
      return {round_down(p), round_up(p)};
    }
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::min({p1, p2, p3, p4});
    double hi = std::max({p1, p2, p3, p4});
    return {round_down(lo), round_up(hi)};
  }
};

inline Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Upper bound on r^k for r >= 0.
inline double pow_up(double r, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = round_up(out * r);
  return out;
}

// Enclosure of {t^k : t in [-r, r]}.
inline Interval symmetric_power(double r, int k) {
  if (k == 0) return {1.0, 1.0};
  double b = pow_up(r, k);
  return (k % 2 == 0) ? Interval{0.0, b} : Interval{-b, b};
}

}  // namespace lensroots
