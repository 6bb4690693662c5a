#pragma once

#include <vector>

#include "lensroots/mixed_polynomial.hpp"

namespace lensroots {

struct LinearFactor {
  Complex gamma;    ///< factor (z + gamma zbar)
  int multiplicity;
};

/// f_d = c z^p zbar^q prod_j (z + gamma_j zbar)^{nu_j} for the top-degree
/// part f_d of f.
struct TopFactorization {
  Complex c;
  int p = 0;
  int q = 0;
  std::vector<LinearFactor> factors;
  int degree = 0;

  /// Expands the product back into a homogeneous mixed polynomial.
  MixedPolynomial expand() const;
};

inline constexpr double kAdmissibilityBand = 1e-6;
inline constexpr double kFactorClusterTolerance = 1e-8;

TopFactorization top_part_factor(const MixedPolynomial& f);

/// True iff every |gamma_j| differs from 1 by more than `band`.
bool is_admissible(const MixedPolynomial& f, double band = kAdmissibilityBand);
bool is_admissible(const TopFactorization& tf, double band = kAdmissibilityBand);

/// p - q + sum_j eps(gamma_j) nu_j with eps = +1 inside the unit disk and -1
/// outside. Throws NotAdmissible.
int beta(const MixedPolynomial& f, double band = kAdmissibilityBand);
int beta(const TopFactorization& tf, double band = kAdmissibilityBand);

/// Winding number of theta -> f(center + r e^{i theta}) around 0. Steps are
/// bisected until consecutive samples differ in argument by less than pi/2.
/// Throws CircleThroughZero when a sample is numerically indistinguishable
/// from zero.
int winding_number(const MixedPolynomial& f, Complex center, double r);

/// Degree of f/|f| on |z| = R.
int winding_beta(const MixedPolynomial& f, double R);

/// Local rotation number of f/|f| on |z - alpha| = r.
int local_multiplicity(const MixedPolynomial& f, Complex alpha, double r);

}  // namespace lensroots
