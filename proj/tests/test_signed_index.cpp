#include <numbers>
#include <random>

#include "doctest.h"
#include "lensroots/error.hpp"
#include "lensroots/lens_families.hpp"
#include "lensroots/signed_index.hpp"
#include "lensroots/solver.hpp"
#include "oracles.hpp"

using namespace lensroots;

namespace {

const MixedPolynomial Z = MixedPolynomial::z();
const MixedPolynomial ZB = MixedPolynomial::zbar();
const MixedPolynomial ONE = MixedPolynomial::constant(1.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// Top part of f composed with z -> lambda z.
MixedPolynomial rotate(const MixedPolynomial& f, Complex lambda) {
  MixedPolynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) t[e] = c * std::pow(lambda, e.nu) * std::pow(std::conj(lambda), e.mu);
  return MixedPolynomial(std::move(t));
}

}  // namespace

TEST_CASE("top part factorization") {
  const auto f2 = rhie(2);
  const auto a = top_part_factor(f2);
  CHECK(a.c == Complex(1.0));
  CHECK(a.p == 2);
  CHECK(a.q == 1);
  CHECK(a.factors.empty());
  CHECK(a.degree == 3);

  const auto b = top_part_factor(Z * Z - 4.0 * ZB * ZB + Z);
  CHECK(b.p == 0);
  CHECK(b.q == 0);
  CHECK(b.c.real() == doctest::Approx(1.0));
  REQUIRE(b.factors.size() == 2);
  std::vector<double> gammas{b.factors[0].gamma.real(), b.factors[1].gamma.real()};
  std::sort(gammas.begin(), gammas.end());
  CHECK(gammas[0] == doctest::Approx(-2.0));
  CHECK(gammas[1] == doctest::Approx(2.0));
  CHECK(b.factors[0].multiplicity == 1);
  CHECK(b.factors[1].multiplicity == 1);

  const auto c = top_part_factor(Z * ZB + Z);
  CHECK(c.p == 1);
  CHECK(c.q == 1);
  CHECK(c.factors.empty());

  CHECK(code_of([] { top_part_factor(MixedPolynomial()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("factorization invariants on random top parts") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const auto f = oracle::random_polynomial(rng, 4, 4);
    const auto tf = top_part_factor(f);
    int total = tf.p + tf.q;
    for (const auto& fac : tf.factors) {
      total += fac.multiplicity;
      CHECK(fac.multiplicity > 0);
      CHECK(std::abs(fac.gamma) > 0.0);
    }
    CHECK(total == tf.degree);
    for (std::size_t i = 0; i < tf.factors.size(); ++i)
      for (std::size_t j = i + 1; j < tf.factors.size(); ++j)
        CHECK(tf.factors[i].gamma != tf.factors[j].gamma);
    const auto top = f.homogeneous_part(tf.degree);
    const auto expanded = tf.expand();
    const double scale = top.max_coefficient_modulus();
    for (int nu = 0; nu <= tf.degree; ++nu)
      CHECK(std::abs(expanded.coefficient(nu, tf.degree - nu) - top.coefficient(nu, tf.degree - nu)) <= 1e-8 * scale);
  }
}

TEST_CASE("repeated linear factors are merged") {
  // (z + 2 zbar)^2 (z - 0.5 zbar)
  const auto l1 = Z + 2.0 * ZB, l2 = Z - 0.5 * ZB;
  const auto tf = top_part_factor(l1 * l1 * l2 + ONE);
  REQUIRE(tf.factors.size() == 2);
  int mult_outside = 0, mult_inside = 0;
  for (const auto& f : tf.factors) (std::abs(f.gamma) > 1 ? mult_outside : mult_inside) += f.multiplicity;
  CHECK(mult_outside == 2);
  CHECK(mult_inside == 1);
  CHECK(beta(tf) == -1);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(Z * Z - 4.0 * ZB * ZB));
  CHECK_FALSE(is_admissible(Z * Z - ZB * ZB));
  CHECK(is_admissible(Z * ZB - ONE));
  CHECK_FALSE(is_admissible(Z * Z - (1.0 + 1e-8) * ZB * ZB));
  CHECK(is_admissible(Z * Z - (1.0 + 1e-4) * ZB * ZB));
}

TEST_CASE("beta examples") {
  CHECK(beta(Z.pow(3) * ZB - ONE) == 2);
  CHECK(beta(Z * Z - 4.0 * ZB * ZB) == -2);
  CHECK(beta(rhie(2)) == 1);
  CHECK(code_of([] { beta(Z * Z - ZB * ZB); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("winding number oracle") {
  CHECK(winding_beta(Z.pow(3) * ZB - ONE, 2.0) == 2);
  CHECK(winding_beta(ZB, 1.0) == -1);
  CHECK(winding_beta(Z * Z - 4.0 * ZB * ZB, 1.0) == -2);
  CHECK(code_of([] { winding_beta(Z * ZB - ONE, 1.0); }) == ErrorCode::CircleThroughZero);
}

TEST_CASE("local multiplicity") {
  CHECK(local_multiplicity(Z, 0.0, 0.1) == 1);
  CHECK(local_multiplicity(Z, 0.0, 1e-4) == 1);
  CHECK(local_multiplicity(ZB * ZB, 0.0, 0.1) == -2);
  CHECK(local_multiplicity(Z * Z * ZB, 0.0, 0.1) == 1);
  CHECK(local_multiplicity(Z - MixedPolynomial::constant(3.0), 0.0, 1.0) == 0);
}

TEST_CASE("beta agrees with the winding number and is invariant") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  int checked = 0;
  for (int k = 0; k < 150; ++k) {
    const auto f = oracle::random_polynomial(rng, 3, 3);
    if (!is_admissible(f, 1e-3)) continue;
    double R = 0.0;
    try {
      R = root_bound(f);
    } catch (const Error&) {
      continue;
    }
    const int b = beta(f);
    CHECK(winding_beta(f, R) == b);
    CHECK(beta(f.scaled(oracle::random_complex(rng) + Complex(0.1, 0.0))) == b);
    CHECK(beta(rotate(f, std::polar(1.0, angle(rng)))) == b);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("beta of class members is deg_z - deg_zbar") {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 3; ++m) {
      if (n == m) continue;
      const auto f = oracle::random_class_member(rng, n, m);
      CHECK(beta(f) == n - m);
    }
}

TEST_CASE("local multiplicity at simple roots matches orientation") {
  const auto inv = solve(rhie(2));
  REQUIRE(inv.certified);
  for (const auto& r : inv.roots) {
    const double rad = 0.5 * std::min(r.uniqueness.width(), r.uniqueness.height());
    CHECK(local_multiplicity(rhie(2), r.center, rad) == r.orientation);
  }
}
