#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lensroots {

using Complex = std::complex<double>;

/// Exponent pair (nu, mu) of a monomial z^nu zbar^mu.
struct Exponent {
  int nu = 0;
  int mu = 0;
  auto operator<=>(const Exponent&) const = default;
};

struct DegreeInfo {
  int deg_z = 0;
  int deg_zbar = 0;
  int deg = 0;
  /// deg == deg_z + deg_zbar, i.e. f is in M(deg; deg_z, deg_zbar).
  bool in_m = false;
  /// f = zbar^m q(z) - p(z) with deg q = deg_z.
  bool in_l = false;
  /// f = r(zbar) q(z) - p(z) with deg r = deg_zbar, deg q = deg_z.
  bool in_lhs = false;
};

/// Sparse polynomial in z and zbar with double-precision complex
/// coefficients. Zero coefficients are never stored; values are immutable
/// once built, so sharing across threads needs no synchronisation.
class MixedPolynomial {
 public:
  using TermMap = std::map<Exponent, Complex>;

  MixedPolynomial() = default;
  explicit MixedPolynomial(TermMap terms);

  static MixedPolynomial constant(Complex c);
  static MixedPolynomial monomial(int nu, int mu, Complex c = 1.0);
  static MixedPolynomial z() { return monomial(1, 0); }
  static MixedPolynomial zbar() { return monomial(0, 1); }
  /// Holomorphic polynomial sum_k coeffs[k] z^k.
  static MixedPolynomial holomorphic(const std::vector<Complex>& coeffs);
  /// Anti-holomorphic polynomial sum_k coeffs[k] zbar^k.
  static MixedPolynomial antiholomorphic(const std::vector<Complex>& coeffs);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Complex coefficient(int nu, int mu) const;
  double max_coefficient_modulus() const;

  Complex evaluate(Complex z) const;
  /// Wirtinger derivatives df/dz and df/dzbar.
  MixedPolynomial d_dz() const;
  MixedPolynomial d_dzbar() const;

  /// Throws ZeroPolynomial for f = 0.
  DegreeInfo degrees() const;
  /// Terms of mixed degree exactly d.
  MixedPolynomial homogeneous_part(int d) const;
  int lowest_degree() const;

  MixedPolynomial conjugate() const;
  MixedPolynomial scaled(Complex c) const;
  MixedPolynomial pow(int k) const;

  friend MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a) { return a.scaled(-1.0); }
  friend MixedPolynomial operator*(Complex c, const MixedPolynomial& a) { return a.scaled(c); }
  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text form: `(re,im) z^nu zb^mu + ...`.
  std::string to_string() const;

 private:
  // Drops exact zeros and terms that cancelled to within the drop tolerance
  // of the magnitude of what was summed into them.
  void prune(const std::map<Exponent, double>& magnitude);

  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul, Scale, Conjugate };

/// Dispatch form of the arithmetic operations; `rhs` is ignored for
/// Conjugate and `c` is only used by Scale.
MixedPolynomial arith(const MixedPolynomial& lhs, const MixedPolynomial& rhs, ArithOp op, Complex c = 1.0);

/// Maps every exponent pair (nu, mu) to (m nu, m mu).
MixedPolynomial substitute_power(const MixedPolynomial& f, int m);

/// J(g, h) at z, computed as |df/dz|^2 - |df/dzbar|^2.
double wirtinger_jacobian(const MixedPolynomial& f, Complex z);

/// Expansion of f(alpha + w, conj(alpha + w)) as a polynomial in (w, wbar).
MixedPolynomial taylor_shift(const MixedPolynomial& f, Complex alpha);

/// Relative cancellation threshold applied after arithmetic.
inline constexpr double kRelativeDropTolerance = 1e-14;

}  // namespace lensroots
