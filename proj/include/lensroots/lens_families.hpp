#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lensroots/mixed_polynomial.hpp"

namespace lensroots {

enum class FamilyKind {
  Generalized,
  Hs,
  Ell,
  EllEps,
  PhiT,
  RhiePreset,
  Product,
  Chebyshev,
  SymmetricPower,
  PointMasses,
};

std::string_view to_string(FamilyKind kind);
/// Throws BadParameters for an unknown name.
FamilyKind family_kind_from_string(std::string_view name);

/// Parameters of one family member. Fields a kind does not use are ignored.
/// Coefficient lists are in increasing degree order.
struct LensFamilySpec {
  FamilyKind kind = FamilyKind::Ell;
  int n = 5;
  int m = 1;
  double a = 0.7;
  /// Negative means "use the default for (n, m, a)".
  double eps = -1.0;
  double t = 1e-3;
  double b = 10.0;  ///< second Chebyshev scale
  /// Rhie preset id (2, 3, 4, or n >= 5 for the general member); also the
  /// base lens of phi_t and symmetric_power when p and q are empty.
  int preset = 2;
  std::vector<Complex> p, q, r;
  std::vector<Complex> sigmas, alphas;
};

nlohmann::json to_json(const LensFamilySpec& spec);
LensFamilySpec family_spec_from_json(const nlohmann::json& j);

MixedPolynomial elaborate(const LensFamilySpec& spec);

/// zbar^m q(z) - p(z).
MixedPolynomial generalized_lens(const std::vector<Complex>& p, const std::vector<Complex>& q, int m);
/// r(zbar) q(z) - p(z).
MixedPolynomial hs_lens(const std::vector<Complex>& p, const std::vector<Complex>& q, const std::vector<Complex>& r);
/// Numerator of zbar - sum sigma_i / (z - alpha_i).
MixedPolynomial from_point_masses(const std::vector<Complex>& sigmas, const std::vector<Complex>& alphas);

/// zbar^m (z^n - a^n) - z^(n-m).
MixedPolynomial ell(int n, int m, double a);
/// z^m zbar^m (z^n - a^n) - z^n - eps (z^n - a^n).
MixedPolynomial ell_eps(int n, int m, double a, double eps);

/// -t zbar^m q(z) + lens, for lens = zbar q(z) - p(z) with p(0) != 0.
MixedPolynomial phi_t(const MixedPolynomial& lens, int m, double t);

/// Presets 2, 3, 4 use the fixed coefficients; n >= 5 is ell_eps(n-1, 1, a, eps).
MixedPolynomial rhie(int n, double a = 0.7, double eps = -1.0);

/// (z^(n-a) zbar^(m-a) - 1)(z^a - 2)(zbar^a - 3); a = 0 gives z^n zbar^m - 1.
MixedPolynomial product_family(int n, int m, int a);

/// Y - T_n(X) + i (X - a T_n(b Y)) with X = (z + zbar)/2, Y = -i (z - zbar)/2.
MixedPolynomial chebyshev_example(int n, double a = 10.0, double b = 10.0);

/// rhie(preset) with z -> z^m.
MixedPolynomial symmetric_power(int m, int preset = 2);

/// Default eps for ell_eps(n, m, a) when none is given.
double default_eps(int n, int m, double a);
/// Default a for ell / ell_eps.
double default_a(int n, int m);

struct PointMassConfig {
  std::vector<Complex> sigmas, alphas;
};

/// Random masses in [0.2, 1.5] at positions uniform in the disk of radius 1.5,
/// kept at least 0.05 apart.
PointMassConfig random_point_masses(int n, std::mt19937_64& rng);

}  // namespace lensroots
