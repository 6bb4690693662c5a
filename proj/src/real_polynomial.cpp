#include "lensroots/real_polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace lensroots {

namespace {

// Exact integer coefficients of (x + iy)^nu (x - iy)^mu as a map
// y-power -> (real, imag) for the monomial x^(nu+mu-k) y^k.
std::vector<std::pair<double, double>> expand_unit(int nu, int mu) {
  const int d = nu + mu;
  std::vector<std::vector<double>> binom(d + 1, std::vector<double>(d + 1, 0.0));
  for (int i = 0; i <= d; ++i) {
    binom[i][0] = 1.0;
    for (int k = 1; k <= i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
  }
  // i^k (-i)^l = i^(k + 3l)
  static constexpr double re_pow[4] = {1, 0, -1, 0};
  static constexpr double im_pow[4] = {0, 1, 0, -1};
  std::vector<std::pair<double, double>> out(d + 1, {0.0, 0.0});
  for (int k = 0; k <= nu; ++k)
    for (int l = 0; l <= mu; ++l) {
      double b = binom[nu][k] * binom[mu][l];
      int ph = (k + 3 * l) % 4;
      out[k + l].first += b * re_pow[ph];
      out[k + l].second += b * im_pow[ph];
    }
  return out;
}

}  // namespace

double RealPolynomial2::evaluate(double x, double y) const {
  double s = 0.0;
  for (const auto& [e, c] : coeffs) s += c * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

int RealPolynomial2::degree() const {
  int d = 0;
  for (const auto& [e, c] : coeffs) d = std::max(d, e.first + e.second);
  return d;
}

RealPair realify(const MixedPolynomial& f) {
  RealPair out;
  for (const auto& [e, a] : f.terms()) {
    const int d = e.nu + e.mu;
    auto unit = expand_unit(e.nu, e.mu);
    for (int k = 0; k <= d; ++k) {
      const auto [ur, ui] = unit[k];
      if (ur == 0.0 && ui == 0.0) continue;
      // (a_r + i a_i)(ur + i ui)
      out.g.coeffs[{d - k, k}] += a.real() * ur - a.imag() * ui;
      out.h.coeffs[{d - k, k}] += a.real() * ui + a.imag() * ur;
    }
  }
  std::erase_if(out.g.coeffs, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(out.h.coeffs, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

IntervalPair realify_interval(const MixedPolynomial& f) {
  const int d = f.is_zero() ? 0 : f.degrees().deg;
  IntervalPair out{IntervalPolynomial2(d), IntervalPolynomial2(d)};
  for (const auto& [e, a] : f.terms()) {
    const int deg = e.nu + e.mu;
    auto unit = expand_unit(e.nu, e.mu);
    for (int k = 0; k <= deg; ++k) {
      const auto [ur, ui] = unit[k];
      if (ur == 0.0 && ui == 0.0) continue;
      Interval ar(a.real()), ai(a.imag());
      out.g.at(deg - k, k) += ar * Interval(ur) - ai * Interval(ui);
      out.h.at(deg - k, k) += ar * Interval(ui) + ai * Interval(ur);
    }
  }
  return out;
}

IntervalPolynomial2 IntervalPolynomial2::shifted(double cx, double cy) const {
  IntervalPolynomial2 out = *this;
  const int d = degree_;
  const Interval icx(cx), icy(cy);
  // Ruffini-Horner Taylor shift along x for every power of y, then along y.
  if (cx != 0.0) {
    for (int j = 0; j <= d; ++j) {
      const int top = d - j;
      for (int k = 0; k < top; ++k)
        for (int i = top - 1; i >= k; --i) out.at(i, j) += icx * out.at(i + 1, j);
    }
  }
  if (cy != 0.0) {
    for (int i = 0; i <= d; ++i) {
      const int top = d - i;
      for (int k = 0; k < top; ++k)
        for (int j = top - 1; j >= k; --j) out.at(i, j) += icy * out.at(i, j + 1);
    }
  }
  return out;
}

Interval IntervalPolynomial2::range_centered(double rx, double ry) const {
  Interval s = at(0, 0);
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      if (i == 0 && j == 0) continue;
      const Interval& c = at(i, j);
      if (c.lo == 0.0 && c.hi == 0.0) continue;
      s += c * (symmetric_power(rx, i) * symmetric_power(ry, j));
    }
  return s;
}

Interval IntervalPolynomial2::d_dx_range_centered(double rx, double ry) const {
  Interval s(0.0);
  for (int i = 1; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) {
      const Interval& c = at(i, j);
      if (c.lo == 0.0 && c.hi == 0.0) continue;
      s += (c * Interval(static_cast<double>(i))) * (symmetric_power(rx, i - 1) * symmetric_power(ry, j));
    }
  return s;
}

Interval IntervalPolynomial2::d_dy_range_centered(double rx, double ry) const {
  Interval s(0.0);
  for (int i = 0; i <= degree_; ++i)
    for (int j = 1; i + j <= degree_; ++j) {
      const Interval& c = at(i, j);
      if (c.lo == 0.0 && c.hi == 0.0) continue;
      s += (c * Interval(static_cast<double>(j))) * (symmetric_power(rx, i) * symmetric_power(ry, j - 1));
    }
  return s;
}

}  // namespace lensroots
