#include "lensroots/milnor.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lensroots/error.hpp"

namespace lensroots {

namespace {

void check_weight(Weight w) {
  if (w.p < 1 || w.q < 1 || std::gcd(w.p, w.q) != 1)
    throw Error(ErrorCode::BadWeight, "weights (" + std::to_string(w.p) + ", " + std::to_string(w.q) +
                                          ") must be positive and coprime");
}

Complex ipow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace

WeightedHomogPoly::WeightedHomogPoly(std::map<Exponent4, Complex> terms, Weight w) : terms_(std::move(terms)), w_(w) {
  check_weight(w);
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex(0.0); });
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "weighted homogeneous polynomial has no terms");
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const int polar = (e[0] - e[1]) * w.p + (e[2] - e[3]) * w.q;
    const int radial = (e[0] + e[1]) * w.p + (e[2] + e[3]) * w.q;
    if (first) {
      polar_ = polar;
      radial_ = radial;
      first = false;
    } else if (polar != polar_ || radial != radial_) {
      throw Error(ErrorCode::NotInClass, "terms have different polar or radial degrees");
    }
  }
}

Complex WeightedHomogPoly::evaluate(Complex z1, Complex z2) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c * ipow(z1, e[0]) * ipow(std::conj(z1), e[1]) * ipow(z2, e[2]) * ipow(std::conj(z2), e[3]);
  return sum;
}

bool WeightedHomogPoly::convenient() const {
  bool pure1 = false, pure2 = false;
  for (const auto& [e, c] : terms_) {
    if (e[2] == 0 && e[3] == 0) pure1 = true;
    if (e[0] == 0 && e[1] == 0) pure2 = true;
  }
  return pure1 && pure2;
}

WeightedHomogPoly homogenize(const MixedPolynomial& f, Weight w) {
  check_weight(w);
  const DegreeInfo d = f.degrees();
  if (!d.in_m)
    throw Error(ErrorCode::NotInClass, "f is not in M(n+m; n, m): the mixed degree is below deg_z + deg_zbar");
  const int n = d.deg_z, m = d.deg_zbar;
  std::map<Exponent4, Complex> terms;
  for (const auto& [e, c] : f.terms())
    terms[{w.q * e.nu, w.q * e.mu, w.p * (n - e.nu), w.p * (m - e.mu)}] = c;
  return WeightedHomogPoly(std::move(terms), w);
}

MixedPolynomial dehomogenize(const WeightedHomogPoly& F) {
  const Weight w = F.weight();
  int n = -1, m = -1;
  bool pure1 = false;
  for (const auto& [e, c] : F.terms()) {
    if (e[0] == 0 && e[1] == 0) {
      if (e[2] % w.p != 0 || e[3] % w.p != 0) throw Error(ErrorCode::NotInClass, "pure z2 exponent not divisible by p");
      n = e[2] / w.p;
      m = e[3] / w.p;
    }
    if (e[2] == 0 && e[3] == 0) pure1 = true;
  }
  if (n < 0) throw Error(ErrorCode::NotConvenient, "no pure z2 term");
  if (!pure1) throw Error(ErrorCode::NotConvenient, "no pure z1 term");
  MixedPolynomial::TermMap t;
  for (const auto& [e, c] : F.terms()) {
    if (e[0] % w.q != 0 || e[1] % w.q != 0) throw Error(ErrorCode::NotInClass, "z1 exponent not divisible by q");
    const int i = e[0] / w.q, j = e[1] / w.q;
    if (e[2] != w.p * (n - i) || e[3] != w.p * (m - j))
      throw Error(ErrorCode::NotInClass, "z2 exponents do not match the pure z2 term");
    t[{i, j}] = c;
  }
  return MixedPolynomial(std::move(t));
}

double euler_identity_error(const WeightedHomogPoly& F, int samples, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1.5, 1.5), radius(0.5, 1.5),
      angle(0.0, 2.0 * std::numbers::pi);
  const Weight w = F.weight();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex z1(coord(rng), coord(rng)), z2(coord(rng), coord(rng));
    const double r = radius(rng), theta = angle(rng);
    const Complex rho = std::polar(r, theta);
    const Complex lhs = F.evaluate(ipow(rho, w.p) * z1, ipow(rho, w.q) * z2);
    const Complex rhs = std::pow(r, F.radial_degree()) * std::polar(1.0, F.polar_degree() * theta) * F.evaluate(z1, z2);
    double scale = 0.0;
    for (const auto& [e, c] : F.terms())
      scale += std::abs(c) * std::pow(std::abs(z1), e[0] + e[1]) * std::pow(std::abs(z2), e[2] + e[3]);
    scale *= std::pow(r, F.radial_degree());
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

MilnorReport invariants_from_rho(const MixedPolynomial& f, Weight w, int rho) {
  check_weight(w);
  const DegreeInfo d = f.degrees();
  if (!d.in_m) throw Error(ErrorCode::NotInClass, "f is not in M(n+m; n, m)");
  MilnorReport r;
  r.weight = w;
  r.n_pol = d.deg_z - d.deg_zbar;
  if (r.n_pol <= 0)
    throw Error(ErrorCode::NonPositivePolarDegree, "deg_z - deg_zbar = " + std::to_string(r.n_pol) + " is not positive");
  r.polar_degree = r.n_pol * w.p * w.q;
  r.radial_degree = (d.deg_z + d.deg_zbar) * w.p * w.q;
  r.rho = rho;
  r.chi_MG = r.n_pol * (2 - rho);
  r.chi_M = -r.n_pol * w.p * w.q * rho + r.n_pol * (w.p + w.q);
  r.link_components = rho;
  r.convenient = f.coefficient(0, 0) != Complex(0.0);
  return r;
}

MilnorReport invariants(const MixedPolynomial& f, Weight w, const SolverConfig& cfg) {
  check_weight(w);
  const DegreeInfo d = f.degrees();
  if (d.deg_z - d.deg_zbar <= 0)
    throw Error(ErrorCode::NonPositivePolarDegree, "deg_z - deg_zbar is not positive");
  return invariants_from_rho(f, w, rho(f, cfg));
}

nlohmann::json to_json(const MilnorReport& r) {
  return {{"weight", {r.weight.p, r.weight.q}},
          {"polar_degree", r.polar_degree},
          {"radial_degree", r.radial_degree},
          {"n_pol", r.n_pol},
          {"rho", r.rho},
          {"chi_M", r.chi_M},
          {"chi_MG", r.chi_MG},
          {"link_components", r.link_components},
          {"convenient", r.convenient}};
}

nlohmann::json to_json(const WeightedHomogPoly& F) {
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : F.terms())
    terms.push_back({{"exponents", e}, {"re", c.real()}, {"im", c.imag()}});
  return {{"weight", {F.weight().p, F.weight().q}},
          {"polar_degree", F.polar_degree()},
          {"radial_degree", F.radial_degree()},
          {"terms", terms}};
}

}  // namespace lensroots
