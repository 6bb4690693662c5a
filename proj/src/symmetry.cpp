#include "lensroots/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lensroots/error.hpp"
#include "lensroots/sturm.hpp"

namespace lensroots {

namespace {

bool at_origin(const CertifiedRoot& r) {
  const Box& e = r.enclosure;
  return e.x0 <= 0.0 && 0.0 <= e.x1 && e.y0 <= 0.0 && 0.0 <= e.y1;
}

// coeffs[k] += c for the monomial u^k.
void add(std::vector<double>& coeffs, int k, double c) {
  if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, 0.0);
  coeffs[k] += c;
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::L ? "L" : "L'"; }

RayConfiguration verify_ray_constraint(const RootInventory& inv, int n, double tol) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "n must be positive");
  RayConfiguration cfg;
  cfg.n = n;
  std::ostringstream bad;
  int violations = 0;
  for (std::size_t i = 0; i < inv.roots.size(); ++i) {
    const CertifiedRoot& r = inv.roots[i];
    if (at_origin(r)) continue;
    const Complex z = r.center;
    const Complex w = std::pow(z, 2 * n);
    const double scale = std::pow(std::abs(z), 2 * n);
    const bool on_ray = std::abs(w.imag()) <= tol * scale && w.real() > 0.0;
    const bool off_circle = std::abs(std::abs(z) - 1.0) > tol;
    if (!on_ray || !off_circle) {
      if (violations++ < 8) bad << " " << z;
      continue;
    }
    int j = static_cast<int>(std::lround(std::arg(z) * n / std::numbers::pi));
    j = ((j % (2 * n)) + 2 * n) % (2 * n);
    cfg.assignments.push_back({i, z, j, j % 2 == 0 ? Branch::L : Branch::LPrime});
  }
  if (violations > 0)
    throw Error(ErrorCode::RayViolation, std::to_string(violations) + " roots off the rays z^" + std::to_string(2 * n) +
                                             " > 0 or on |z| = 1:" + bad.str());
  cfg.orbits = orbit_decompose(inv, n, tol);
  return cfg;
}

std::vector<std::vector<std::size_t>> orbit_decompose(const RootInventory& inv, int n, double tol) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "n must be positive");
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / n);
  const auto& roots = inv.roots;
  std::vector<bool> used(roots.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<std::size_t> orbit{i};
    if (!at_origin(roots[i])) {
      Complex z = roots[i].center;
      for (int k = 1; k < n; ++k) {
        z *= omega;
        std::size_t match = roots.size();
        for (std::size_t j = 0; j < roots.size(); ++j) {
          if (used[j]) continue;
          const double reach = std::max(tol * std::abs(z), roots[i].radius + roots[j].radius);
          if (std::abs(roots[j].center - z) <= reach) {
            match = j;
            break;
          }
        }
        if (match == roots.size()) {
          std::ostringstream os;
          os << "rotation of " << roots[i].center << " by e^{2 pi i " << k << "/" << n << "} is not a root";
          throw Error(ErrorCode::NotInvariant, os.str());
        }
        if (roots[match].orientation != roots[i].orientation) {
          std::ostringstream os;
          os << "orbit of " << roots[i].center << " mixes orientations";
          throw Error(ErrorCode::NotInvariant, os.str());
        }
        used[match] = true;
        orbit.push_back(match);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

RadialEquation radial_equation(int n, int m, double a, double eps, Branch branch) {
  if (!(n > m && m > 0) || !(a > 0.0) || !(eps >= 0.0))
    throw Error(ErrorCode::BadParameters, "radial equation needs n > m > 0, a > 0, eps >= 0");
  RadialEquation eq;
  eq.branch = branch;
  eq.n = n;
  eq.m = m;
  const double an = std::pow(a, n);
  const bool l = branch == Branch::L;
  auto& c = eq.coeffs;
  if (eps > 0.0) {
    const double one_eps = 1.0 + eps;
    const double an_eps = eps * an;
    const double s = l ? 1.0 : -1.0;
    add(c, n + 2 * m, s);
    add(c, n, -s * one_eps);
    add(c, 2 * m, -an);
    add(c, 0, an_eps);
  } else if (n > 2 * m) {
    add(c, n, 1.0);
    add(c, n - 2 * m, -1.0);
    add(c, 0, l ? -an : an);
  } else {
    add(c, 2 * m, 1.0);
    add(c, 2 * m - n, l ? -an : an);
    add(c, 0, -1.0);
  }
  eq.validity = l ? "u real, u != 0, z = u" : "u real, u != 0, z = e^{i pi/n} u";
  return eq;
}

int branch_multiplicity(int n, Branch branch) {
  // Odd n: every line of L(n) also carries the rays of L(n)', and the
  // orbit of a real root has n points. Even n: each line is two rays, so a
  // real root and its negative share one orbit of n points.
  if (n % 2 == 1) return branch == Branch::L ? n : 0;
  return n / 2;
}

SymmetricCount symmetric_count(int n, int m, double a, double eps) {
  SymmetricCount out;
  auto nonzero_real_roots = [](const RadialEquation& eq) {
    const auto p = RationalPolynomial::from_doubles(eq.coeffs);
    int count = sturm_count(p);
    if (sgn(p.evaluate(0)) == 0) --count;
    return count;
  };
  out.multiplicity_l = branch_multiplicity(n, Branch::L);
  out.multiplicity_lprime = branch_multiplicity(n, Branch::LPrime);
  out.real_roots_l = nonzero_real_roots(radial_equation(n, m, a, eps, Branch::L));
  if (out.multiplicity_lprime > 0)
    out.real_roots_lprime = nonzero_real_roots(radial_equation(n, m, a, eps, Branch::LPrime));
  out.total = out.real_roots_l * out.multiplicity_l + out.real_roots_lprime * out.multiplicity_lprime;
  return out;
}

}  // namespace lensroots
