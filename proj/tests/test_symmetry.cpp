#include <cmath>

#include "doctest.h"
#include "lensroots/error.hpp"
#include "lensroots/lens_families.hpp"
#include "lensroots/sturm.hpp"
#include "lensroots/symmetry.hpp"

using namespace lensroots;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

bool at_origin(const CertifiedRoot& r) { return std::abs(r.center) <= r.radius; }

// Sign changes of p on a fine grid: a lower bound on the number of real roots.
int sign_changes(const std::vector<double>& c, double lo, double hi, int steps) {
  auto eval = [&](double x) {
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  };
  int changes = 0;
  double prev = eval(lo);
  for (int i = 1; i <= steps; ++i) {
    const double v = eval(lo + (hi - lo) * i / steps);
    if ((prev < 0) != (v < 0) && v != 0.0) ++changes;
    if (v != 0.0) prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("sturm counts") {
  const double a5 = std::pow(0.1, 5), a4 = std::pow(0.1, 4);
  CHECK(sturm_count({-a5, 0, 0, -1, 0, 1}) == 3);
  CHECK(sturm_count({-a4, 0, -1, 0, 1}) == 2);
  CHECK(sturm_count({-a4, 0, 1, 0, -1}) == 4);
  CHECK(sturm_count({-2, 0, 1}, 0.0, 10.0) == 1);
  CHECK(sturm_count({-2, 0, 1}, -10.0, 0.0) == 1);
  // (lo, hi] convention
  CHECK(sturm_count({-1, 1}, 1.0, 2.0) == 0);
  CHECK(sturm_count({-1, 1}, 0.0, 1.0) == 1);
  CHECK(code_of([] { sturm_count({1, -2, 1}); }) == ErrorCode::NotSquarefree);
}

TEST_CASE("sturm agrees with sign changes for well separated roots") {
  // prod (x - k/3) for k = -4..4 with a small perturbation
  std::vector<double> c{1.0};
  for (int k = -4; k <= 4; ++k) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * (k / 3.0);
    }
    c = next;
  }
  CHECK(sturm_count(c) == 9);
  CHECK(sign_changes(c, -2.0, 2.0, 4000) == 9);
  CHECK(sturm_count(c, 0.0, 2.0) == 4);
}

TEST_CASE("radial equations") {
  const double a = 0.6;
  const auto l51 = radial_equation(5, 1, a, 0.0, Branch::L);
  REQUIRE(l51.coeffs.size() == 6);
  CHECK(l51.coeffs[5] == 1.0);
  CHECK(l51.coeffs[3] == -1.0);
  CHECK(l51.coeffs[0] == doctest::Approx(-std::pow(a, 5)));
  CHECK(l51.coeffs[1] == 0.0);

  // u^4 + a^4 - u^2
  const auto l41 = radial_equation(4, 1, a, 0.0, Branch::LPrime);
  REQUIRE(l41.coeffs.size() == 5);
  CHECK(l41.coeffs[4] == 1.0);
  CHECK(l41.coeffs[2] == -1.0);
  CHECK(l41.coeffs[0] == doctest::Approx(std::pow(a, 4)));

  // z^2 (z^6 - a^6) - 1
  const auto l64 = radial_equation(6, 4, a, 0.0, Branch::L);
  REQUIRE(l64.coeffs.size() == 9);
  CHECK(l64.coeffs[8] == 1.0);
  CHECK(l64.coeffs[2] == doctest::Approx(-std::pow(a, 6)));
  CHECK(l64.coeffs[0] == -1.0);

  CHECK(code_of([] { radial_equation(3, 3, 0.5, 0.0, Branch::L); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { radial_equation(5, 1, -0.5, 0.0, Branch::L); }) == ErrorCode::BadParameters);
}

TEST_CASE("radial equation roots lie on the family") {
  // each nonzero real root u gives a root zeta u of the family
  for (auto [n, m, a, eps] : {std::tuple{5, 1, 0.7, 0.0}, {4, 1, 0.3, 0.0}, {6, 4, 0.5, 0.0}, {5, 1, 0.7, 1e-3}}) {
    const auto f = eps > 0 ? ell_eps(n, m, a, eps) : ell(n, m, a);
    for (Branch b : {Branch::L, Branch::LPrime}) {
      const auto eq = radial_equation(n, m, a, eps, b);
      const Complex zeta = b == Branch::L ? 1.0 : std::polar(1.0, std::numbers::pi / n);
      // scan for sign changes and bisect
      auto eval = [&](double x) {
        double s = 0.0;
        for (auto it = eq.coeffs.rbegin(); it != eq.coeffs.rend(); ++it) s = s * x + *it;
        return s;
      };
      int found = 0;
      const int steps = 20000;
      for (int i = 0; i < steps; ++i) {
        double lo = -3.0 + 6.0 * i / steps, hi = -3.0 + 6.0 * (i + 1) / steps;
        if ((eval(lo) < 0) == (eval(hi) < 0)) continue;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          ((eval(lo) < 0) == (eval(mid) < 0) ? lo : hi) = mid;
        }
        const double u = 0.5 * (lo + hi);
        if (std::abs(u) < 1e-9) continue;
        CHECK(std::abs(f.evaluate(zeta * u)) < 1e-9);
        CHECK(std::abs(std::abs(u) - 1.0) > 1e-6);
        ++found;
      }
      CHECK(found == sturm_count(eq.coeffs) - (eq.coeffs[0] == 0.0 ? 1 : 0));
    }
  }
}

TEST_CASE("branch multiplicities") {
  CHECK(branch_multiplicity(5, Branch::L) == 5);
  CHECK(branch_multiplicity(5, Branch::LPrime) == 0);
  CHECK(branch_multiplicity(4, Branch::L) == 2);
  CHECK(branch_multiplicity(4, Branch::LPrime) == 2);
}

TEST_CASE("ray constraint on the symmetric lens") {
  const auto inv = solve(ell(5, 1, 0.7));
  REQUIRE(inv.certified);
  const auto cfg = verify_ray_constraint(inv, 5);
  int off_origin = 0;
  for (const auto& r : inv.roots) off_origin += at_origin(r) ? 0 : 1;
  CHECK(off_origin == 15);
  CHECK(cfg.assignments.size() == 15);
  for (const auto& as : cfg.assignments) {
    CHECK(std::abs(std::abs(as.z) - 1.0) > 1e-8);
    CHECK(as.ray >= 0);
    CHECK(as.ray < 10);
  }
  int size5 = 0;
  for (const auto& o : cfg.orbits) size5 += o.size() == 5 ? 1 : 0;
  CHECK(size5 == 3);
}

TEST_CASE("ray branches for n even") {
  const auto inv = solve(ell(4, 1, 0.3));
  REQUIRE(inv.certified);
  const auto cfg = verify_ray_constraint(inv, 4);
  int on_l = 0, on_lp = 0;
  for (const auto& as : cfg.assignments) (as.branch == Branch::L ? on_l : on_lp)++;
  CHECK(on_l == 4);
  CHECK(on_lp == 8);
  const auto count = symmetric_count(4, 1, 0.3, 0.0);
  CHECK(count.total == on_l + on_lp);
}

TEST_CASE("ray violation and orbits") {
  const auto generic = chebyshev_example(2);
  CHECK(code_of([&] { verify_ray_constraint(solve(generic), 5); }) == ErrorCode::RayViolation);

  const auto inv = solve(ell(6, 4, 0.5));
  const auto orbits = orbit_decompose(inv, 6);
  int size6 = 0;
  for (const auto& o : orbits) size6 += o.size() == 6 ? 1 : 0;
  CHECK(size6 == 2);
  CHECK(orbits.size() == 2);

  RootInventory single;
  single.roots.push_back(CertifiedRoot{1.0, 1e-12, 1, 0.0, 1, {1 - 1e-12, 1 + 1e-12, -1e-12, 1e-12}, {}});
  CHECK(orbit_decompose(single, 1).size() == 1);
  CHECK(code_of([&] { orbit_decompose(single, 3); }) == ErrorCode::NotInvariant);
}

TEST_CASE("rotations of roots are roots of the same orientation") {
  const auto f = ell(5, 2, 0.5);
  const auto inv = solve(f);
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 5);
  for (const auto& r : inv.roots) {
    const Complex z = r.center * w;
    CHECK(std::abs(f.evaluate(z)) < 1e-9);
    CHECK((wirtinger_jacobian(f, z) > 0 ? 1 : -1) == r.orientation);
  }
}
