#include <random>

#include "doctest.h"
#include "lensroots/error.hpp"
#include "lensroots/lens_families.hpp"
#include "lensroots/milnor.hpp"
#include "oracles.hpp"

using namespace lensroots;

namespace {

const MixedPolynomial Z = MixedPolynomial::z();
const MixedPolynomial ZB = MixedPolynomial::zbar();
MixedPolynomial C(Complex c) { return MixedPolynomial::constant(c); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("homogenize examples") {
  const auto f = Z * Z * ZB - C(1.0);
  const auto F = homogenize(f, {1, 1});
  const std::map<Exponent4, Complex> expected{{{2, 1, 0, 0}, 1.0}, {{0, 0, 2, 1}, -1.0}};
  CHECK(F.terms() == expected);
  CHECK(F.polar_degree() == 1);
  CHECK(F.radial_degree() == 3);

  const auto G = homogenize(f, {2, 1});
  const std::map<Exponent4, Complex> expected21{{{2, 1, 0, 0}, 1.0}, {{0, 0, 4, 2}, -1.0}};
  CHECK(G.terms() == expected21);
  CHECK(G.polar_degree() == 2);
  CHECK(G.radial_degree() == 6);

  // zbar1 (z1^2 - z2^2 / 2) - (z1 z2 - z2^2 / 30) zbar2
  const auto H = homogenize(rhie(2), {1, 1});
  const std::map<Exponent4, Complex> expected_f2{{{2, 1, 0, 0}, 1.0},
                                                 {{0, 1, 2, 0}, -0.5},
                                                 {{1, 0, 1, 1}, -1.0},
                                                 {{0, 0, 2, 1}, 1.0 / 30}};
  CHECK(H.terms() == expected_f2);
}

TEST_CASE("homogenize errors") {
  CHECK(code_of([] { homogenize(Z * Z - 4.0 * ZB * ZB, {1, 1}); }) == ErrorCode::NotInClass);
  CHECK(code_of([] { homogenize(Z * Z * ZB - C(1.0), {2, 2}); }) == ErrorCode::BadWeight);
  CHECK(code_of([] { homogenize(Z * Z * ZB - C(1.0), {0, 1}); }) == ErrorCode::BadWeight);
}

TEST_CASE("dehomogenize examples") {
  const WeightedHomogPoly F({{{2, 1, 0, 0}, 1.0}, {{0, 0, 2, 1}, -1.0}}, {1, 1});
  CHECK(dehomogenize(F) == Z * Z * ZB - C(1.0));
  CHECK(F.convenient());
  const WeightedHomogPoly G({{{2, 1, 0, 0}, 1.0}, {{1, 0, 1, 1}, -1.0}}, {1, 1});
  CHECK_FALSE(G.convenient());
  CHECK(code_of([&] { dehomogenize(G); }) == ErrorCode::NotConvenient);
  CHECK(code_of([] { WeightedHomogPoly({{{2, 1, 0, 0}, 1.0}, {{0, 0, 1, 0}, 1.0}}, {1, 1}); }) ==
        ErrorCode::NotInClass);
}

TEST_CASE("round trip on random class members") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> deg_n(1, 5), deg_m(0, 3);
  for (Weight w : {Weight{1, 1}, Weight{2, 1}, Weight{3, 2}}) {
    for (int k = 0; k < 100; ++k) {
      const int n = deg_n(rng), m = deg_m(rng);
      const auto f = oracle::random_class_member(rng, n, m);
      const auto F = homogenize(f, w);
      CHECK(F.convenient());
      CHECK(dehomogenize(F) == f);
      CHECK(homogenize(dehomogenize(F), w).terms() == F.terms());
      CHECK(F.polar_degree() == (n - m) * w.p * w.q);
      CHECK(F.radial_degree() == (n + m) * w.p * w.q);
      CHECK(euler_identity_error(F, 50, rng) <= 1e-9);
      // affine chart z2 = 1 recovers f
      const Complex z = oracle::random_complex(rng, 0.8);
      Complex z1 = std::pow(z, 1.0 / w.q);
      CHECK(std::abs(F.evaluate(z1, 1.0) - oracle::evaluate_naive(f, std::pow(z1, w.q))) <=
            1e-10 * std::max(1.0, oracle::magnitude_at(f, z)));
    }
  }
}

TEST_CASE("milnor invariants") {
  const auto r = invariants(rhie(2), {1, 1});
  CHECK(r.n_pol == 1);
  CHECK(r.polar_degree == 1);
  CHECK(r.radial_degree == 3);
  CHECK(r.rho == 5);
  CHECK(r.chi_M == -3);
  CHECK(r.chi_MG == -3);
  CHECK(r.link_components == 5);
  CHECK(r.convenient);

  const auto s = invariants(Z.pow(3) * ZB.pow(2) - C(1.0), {1, 1});
  CHECK(s.rho == 1);
  CHECK(s.chi_M == 1);
  CHECK(s.link_components == 1);

  CHECK(invariants(rhie(2), {2, 1}).chi_M == -7);
  CHECK(invariants_from_rho(rhie(2), {2, 1}, 5).chi_M == -7);

  CHECK(code_of([] { invariants(Z * ZB * ZB - C(1.0), {1, 1}); }) == ErrorCode::NonPositivePolarDegree);
  CHECK(code_of([] { invariants(Z * ZB - C(1.0), {1, 1}); }) == ErrorCode::NonPositivePolarDegree);
}

TEST_CASE("equal weights give equal euler characteristics") {
  for (int rho = 1; rho <= 15; rho += 2)
    for (int n = 1; n <= 3; ++n) {
      const auto f = Z.pow(n + 1) * ZB - C(1.0);
      const auto r = invariants_from_rho(f, {1, 1}, rho);
      CHECK(r.chi_M == r.chi_MG);
    }
}

TEST_CASE("different counts separate link components") {
  const auto a = invariants(rhie(2), {1, 1});
  const auto b = invariants(product_family(3, 2, 1), {1, 1});
  CHECK(a.rho != b.rho);
  CHECK(a.link_components != b.link_components);
}

TEST_CASE("non-convenient input is flagged") {
  const auto r = invariants_from_rho(Z * Z * ZB - Z, {1, 1}, 3);
  CHECK_FALSE(r.convenient);
}
