#pragma once

#include <array>
#include <map>
#include <random>

#include "json.hpp"
#include "lensroots/mixed_polynomial.hpp"
#include "lensroots/solver.hpp"

namespace lensroots {

/// Exponents of z1, conj(z1), z2, conj(z2).
using Exponent4 = std::array<int, 4>;

/// Weight P = (p, q): z1 has weight p, z2 has weight q.
struct Weight {
  int p = 1;
  int q = 1;
};

class WeightedHomogPoly {
 public:
  WeightedHomogPoly(std::map<Exponent4, Complex> terms, Weight w);

  const std::map<Exponent4, Complex>& terms() const { return terms_; }
  Weight weight() const { return w_; }
  int polar_degree() const { return polar_; }
  int radial_degree() const { return radial_; }

  Complex evaluate(Complex z1, Complex z2) const;
  /// Both a pure z2 term and a pure z1 term are present.
  bool convenient() const;

 private:
  std::map<Exponent4, Complex> terms_;
  Weight w_;
  int polar_ = 0;
  int radial_ = 0;
};

/// z^i zbar^j -> z1^(qi) zbar1^(qj) z2^(p(n-i)) zbar2^(p(m-j)) for f in
/// M(n+m; n, m). Throws NotInClass, BadWeight.
WeightedHomogPoly homogenize(const MixedPolynomial& f, Weight w);

/// Inverse of homogenize; n and m are read off the pure z2 term. Throws
/// NotConvenient, NotInClass.
MixedPolynomial dehomogenize(const WeightedHomogPoly& F);

/// Largest relative deviation of F(rho^p z1, rho^q z2) from
/// r^{d_r} e^{i d_p theta} F(z1, z2), rho = r e^{i theta}, over random samples.
double euler_identity_error(const WeightedHomogPoly& F, int samples, std::mt19937_64& rng);

struct MilnorReport {
  Weight weight;
  int polar_degree = 0;
  int radial_degree = 0;
  int n_pol = 0;
  int rho = 0;
  int chi_M = 0;
  int chi_MG = 0;
  int link_components = 0;
  /// f has a nonzero constant term; the Euler characteristics are only
  /// meaningful in this case.
  bool convenient = false;
};

/// Throws NonPositivePolarDegree, BadWeight, NotInClass, and whatever the
/// certified count throws.
MilnorReport invariants(const MixedPolynomial& f, Weight w, const SolverConfig& cfg = {});
/// Same, with a count already certified elsewhere.
MilnorReport invariants_from_rho(const MixedPolynomial& f, Weight w, int rho);

nlohmann::json to_json(const MilnorReport& r);
nlohmann::json to_json(const WeightedHomogPoly& F);

}  // namespace lensroots
