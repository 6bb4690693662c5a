#include "lensroots/signed_index.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lensroots/error.hpp"

namespace lensroots {

namespace {

// Roots of sum_k coeffs[k] t^k (coeffs.back() != 0) via the companion matrix,
// polished by a few Newton steps.
std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (auto& r : roots) {
    for (int it = 0; it < 4; ++it) {
      Complex p = coeffs[n], dp = 0.0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * r + p;
        p = p * r + coeffs[k];
      }
      if (std::abs(dp) < 1e-300) break;
      Complex next = r - p / dp;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      // Newton is only allowed to improve the residual.
      Complex pn = coeffs[n];
      for (int k = n - 1; k >= 0; --k) pn = pn * next + coeffs[k];
      if (std::abs(pn) >= std::abs(p)) break;
      r = next;
    }
  }
  return roots;
}

std::vector<LinearFactor> cluster(const std::vector<Complex>& roots, double tol) {
  std::vector<LinearFactor> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - roots[i]) <= tol * std::max(1.0, std::abs(roots[i]))) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    // Root t = -gamma.
    out.push_back({-sum / static_cast<double>(count), count});
  }
  return out;
}

bool reproduces(const TopFactorization& tf, const MixedPolynomial& top) {
  MixedPolynomial e = tf.expand();
  double scale = top.max_coefficient_modulus();
  for (int nu = 0; nu <= tf.degree; ++nu) {
    int mu = tf.degree - nu;
    if (std::abs(e.coefficient(nu, mu) - top.coefficient(nu, mu)) > 1e-8 * scale) return false;
  }
  return true;
}

double wrap_angle(double a) {
  constexpr double pi = std::numbers::pi;
  while (a > pi) a -= 2 * pi;
  while (a <= -pi) a += 2 * pi;
  return a;
}

}  // namespace

MixedPolynomial TopFactorization::expand() const {
  MixedPolynomial out = MixedPolynomial::monomial(p, q, c);
  for (const auto& f : factors) {
    MixedPolynomial lin = MixedPolynomial::z() + MixedPolynomial::monomial(0, 1, f.gamma);
    out = out * lin.pow(f.multiplicity);
  }
  return out;
}

TopFactorization top_part_factor(const MixedPolynomial& f) {
  const DegreeInfo deg = f.degrees();
  const MixedPolynomial top = f.homogeneous_part(deg.deg);
  TopFactorization tf;
  tf.degree = deg.deg;
  tf.p = deg.deg;
  tf.q = deg.deg;
  for (const auto& [e, c] : top.terms()) {
    tf.p = std::min(tf.p, e.nu);
    tf.q = std::min(tf.q, e.mu);
  }
  // g(t) = f_d(t, 1) / t^p, degree d - p - q, nonzero constant term.
  const int n = deg.deg - tf.p - tf.q;
  std::vector<Complex> g(n + 1, 0.0);
  for (const auto& [e, c] : top.terms()) g[e.nu - tf.p] = c;
  tf.c = g[n];
  if (n == 0) return tf;
  const auto roots = univariate_roots(g);
  // Multiple factors spread numerically like eps^(1/k); take the widest
  // merge radius whose product still reproduces f_d.
  for (double tol = 1e-3; tol >= kFactorClusterTolerance * 0.5; tol *= 0.1) {
    tf.factors = cluster(roots, tol);
    if (reproduces(tf, top)) return tf;
  }
  tf.factors = cluster(roots, kFactorClusterTolerance);
  return tf;
}

bool is_admissible(const TopFactorization& tf, double band) {
  return std::all_of(tf.factors.begin(), tf.factors.end(),
                     [band](const LinearFactor& lf) { return std::abs(std::abs(lf.gamma) - 1.0) > band; });
}

bool is_admissible(const MixedPolynomial& f, double band) { return is_admissible(top_part_factor(f), band); }

int beta(const TopFactorization& tf, double band) {
  if (!is_admissible(tf, band)) throw Error(ErrorCode::NotAdmissible, "some |gamma_j| lies within the band around 1");
  int b = tf.p - tf.q;
  for (const auto& lf : tf.factors) b += (std::abs(lf.gamma) < 1.0 ? 1 : -1) * lf.multiplicity;
  return b;
}

int beta(const MixedPolynomial& f, double band) { return beta(top_part_factor(f), band); }

int winding_number(const MixedPolynomial& f, Complex center, double r) {
  constexpr double pi = std::numbers::pi;
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "winding of the zero polynomial");
  const MixedPolynomial g = center == Complex(0.0) ? f : taylor_shift(f, center);

  auto sample = [&](double theta) {
    const Complex w = std::polar(r, theta);
    const Complex v = g.evaluate(w);
    double scale = 0.0;
    for (const auto& [e, c] : g.terms()) scale += std::abs(c) * std::pow(r, e.nu + e.mu);
    if (!(std::abs(v) >= 1e-12 * scale) || std::abs(v) == 0.0)
      throw Error(ErrorCode::CircleThroughZero, "f vanishes numerically on the winding circle");
    return v;
  };

  const int coarse = 64 * std::max(1, g.degrees().deg);
  double total = 0.0;
  Complex prev = sample(0.0);
  for (int k = 0; k < coarse; ++k) {
    const double t0 = 2 * pi * k / coarse;
    const double t1 = 2 * pi * (k + 1) / coarse;
    // Depth-first refinement of [t0, t1].
    struct Seg {
      double a, b;
      Complex fa;
      int depth;
    };
    std::vector<Seg> stack{{t0, t1, prev, 0}};
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      const Complex fb = sample(s.b);
      const double d = wrap_angle(std::arg(fb) - std::arg(s.fa));
      if (std::abs(d) < pi / 2) {
        total += d;
        prev = fb;
        continue;
      }
      if (s.depth > 40) throw Error(ErrorCode::CircleThroughZero, "argument step did not resolve");
      const double m = 0.5 * (s.a + s.b);
      stack.push_back({m, s.b, sample(m), s.depth + 1});
      stack.push_back({s.a, m, s.fa, s.depth + 1});
    }
  }
  return static_cast<int>(std::lround(total / (2 * pi)));
}

int winding_beta(const MixedPolynomial& f, double R) { return winding_number(f, 0.0, R); }

int local_multiplicity(const MixedPolynomial& f, Complex alpha, double r) { return winding_number(f, alpha, r); }

}  // namespace lensroots
