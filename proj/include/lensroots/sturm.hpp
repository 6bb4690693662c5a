#pragma once

#include <limits>
#include <vector>

#include <gmpxx.h>

namespace lensroots {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first, no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);
  /// Every double is a dyadic rational, so the conversion is exact.
  static RationalPolynomial from_doubles(const std::vector<double>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const { return c_.back(); }

  mpq_class evaluate(const mpq_class& x) const;
  RationalPolynomial derivative() const;
  /// Remainder of division by a nonzero divisor.
  RationalPolynomial remainder(const RationalPolynomial& divisor) const;
  RationalPolynomial operator-() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// p, p', -rem(p, p'), ... ; throws NotSquarefree when gcd(p, p') is not
/// constant.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots in (lo, hi]; lo and hi may be infinite.
int sturm_count(const RationalPolynomial& p, double lo = -std::numeric_limits<double>::infinity(),
                double hi = std::numeric_limits<double>::infinity());
int sturm_count(const std::vector<double>& coeffs, double lo = -std::numeric_limits<double>::infinity(),
                double hi = std::numeric_limits<double>::infinity());

}  // namespace lensroots
