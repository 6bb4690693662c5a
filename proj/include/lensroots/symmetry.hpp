#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lensroots/solver.hpp"

namespace lensroots {

/// L(n): lines at angles 2j pi / n.  L(n)': lines at angles (2j+1) pi / n.
enum class Branch { L, LPrime };

std::string_view to_string(Branch b);

struct RayAssignment {
  std::size_t root = 0;  ///< index into RootInventory::roots
  Complex z;
  int ray = 0;  ///< j with arg z = j pi / n, 0 <= j < 2n
  Branch branch = Branch::L;
};

struct RayConfiguration {
  int n = 0;
  std::vector<RayAssignment> assignments;
  /// Orbits under multiplication by e^{2 pi i / n}, as root indices.
  std::vector<std::vector<std::size_t>> orbits;
};

/// Real polynomial (lowest degree first) whose nonzero real roots u give the
/// roots z = zeta u of the family on the lines of `branch`, zeta = 1 for L
/// and zeta = e^{i pi / n} for L'.
struct RadialEquation {
  std::vector<double> coeffs;
  Branch branch = Branch::L;
  int n = 0;
  int m = 0;
  /// Real roots are counted on the punctured line.
  std::string validity;
};

/// Roots exactly at the origin are skipped. Throws RayViolation listing the
/// offending roots.
RayConfiguration verify_ray_constraint(const RootInventory& inv, int n, double tol = 1e-8);

/// Two roots match when the rotated one lies within max(tol |z|, r1 + r2) of
/// the other. Throws NotInvariant.
std::vector<std::vector<std::size_t>> orbit_decompose(const RootInventory& inv, int n, double tol = 1e-8);

/// eps = 0 gives the equation of ell(n, m, a), eps > 0 that of ell_eps.
RadialEquation radial_equation(int n, int m, double a, double eps, Branch branch);

/// Family roots contributed by one nonzero real root of the branch equation.
int branch_multiplicity(int n, Branch branch);

struct SymmetricCount {
  int real_roots_l = 0;
  int real_roots_lprime = 0;
  int multiplicity_l = 0;
  int multiplicity_lprime = 0;
  int total = 0;
};

/// Nonzero roots of ell / ell_eps counted through exact Sturm sequences.
SymmetricCount symmetric_count(int n, int m, double a, double eps);

}  // namespace lensroots
