#include "lensroots/lens_families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lensroots/error.hpp"

namespace lensroots {

namespace {

using P = MixedPolynomial;

constexpr std::array<std::pair<FamilyKind, std::string_view>, 10> kKindNames{{
    {FamilyKind::Generalized, "generalized"},
    {FamilyKind::Hs, "hs"},
    {FamilyKind::Ell, "ell"},
    {FamilyKind::EllEps, "ell_eps"},
    {FamilyKind::PhiT, "phi_t"},
    {FamilyKind::RhiePreset, "rhie_preset"},
    {FamilyKind::Product, "product"},
    {FamilyKind::Chebyshev, "chebyshev"},
    {FamilyKind::SymmetricPower, "symmetric_power"},
    {FamilyKind::PointMasses, "point_masses"},
}};

int degree_of(const std::vector<Complex>& c) {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (c[k] != Complex(0.0)) return k;
  return -1;
}

P z_pow(int k) { return P::monomial(k, 0); }
P zb_pow(int k) { return P::monomial(0, k); }

// z^n - a^n with a^n evaluated once.
P shifted_power(int n, double a) { return z_pow(n) - P::constant(std::pow(a, n)); }

nlohmann::json complex_list(const std::vector<Complex>& v) {
  auto out = nlohmann::json::array();
  for (auto c : v) out.push_back({c.real(), c.imag()});
  return out;
}

std::vector<Complex> complex_list_from(const nlohmann::json& j) {
  std::vector<Complex> out;
  for (const auto& e : j) {
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(ErrorCode::ParseError, "coefficient must be a number or a [re, im] pair");
    }
  }
  return out;
}

// z zbar q - z^3 - q/800 with q = z^3 - 1/5.
P rhie4() {
  const P q = z_pow(3) - P::constant(1.0 / 5.0);
  return P::monomial(1, 1) * q - z_pow(3) - P::constant(1.0 / 800.0) * q;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

FamilyKind family_kind_from_string(std::string_view name) {
  for (const auto& [k, s] : kKindNames)
    if (s == name) return k;
  throw Error(ErrorCode::BadParameters, "unknown family kind '" + std::string(name) + "'");
}

MixedPolynomial generalized_lens(const std::vector<Complex>& p, const std::vector<Complex>& q, int m) {
  const int n = degree_of(q);
  if (n < 1) throw Error(ErrorCode::DegreeViolation, "q must have degree >= 1");
  if (degree_of(p) > n) throw Error(ErrorCode::DegreeViolation, "deg p exceeds deg q");
  if (m < 1) throw Error(ErrorCode::DegreeViolation, "m must be >= 1");
  return zb_pow(m) * P::holomorphic(q) - P::holomorphic(p);
}

MixedPolynomial hs_lens(const std::vector<Complex>& p, const std::vector<Complex>& q, const std::vector<Complex>& r) {
  const int n = degree_of(q);
  const int m = degree_of(r);
  if (n < 1) throw Error(ErrorCode::DegreeViolation, "q must have degree >= 1");
  if (m < 1) throw Error(ErrorCode::DegreeViolation, "r must have degree >= 1");
  if (degree_of(p) > n) throw Error(ErrorCode::DegreeViolation, "deg p exceeds deg q");
  return P::antiholomorphic(r) * P::holomorphic(q) - P::holomorphic(p);
}

MixedPolynomial from_point_masses(const std::vector<Complex>& sigmas, const std::vector<Complex>& alphas) {
  if (sigmas.size() != alphas.size() || alphas.empty())
    throw Error(ErrorCode::BadParameters, "need the same positive number of masses and positions");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (sigmas[i] == Complex(0.0)) throw Error(ErrorCode::BadParameters, "masses must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(alphas[i] - alphas[j]) <= 1e-12 * std::max(1.0, std::abs(alphas[i])))
        throw Error(ErrorCode::DuplicatePoles, "positions " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  auto linear = [](Complex alpha) { return P::holomorphic({-alpha, 1.0}); };
  P all = P::constant(1.0);
  for (auto a : alphas) all = all * linear(a);
  P sum;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    P others = P::constant(sigmas[i]);
    for (std::size_t j = 0; j < alphas.size(); ++j)
      if (j != i) others = others * linear(alphas[j]);
    sum = sum + others;
  }
  return P::zbar() * all - sum;
}

MixedPolynomial ell(int n, int m, double a) {
  if (!(n > m && m > 0) || !(a > 0.0)) throw Error(ErrorCode::BadParameters, "ell needs n > m > 0 and a > 0");
  return zb_pow(m) * shifted_power(n, a) - z_pow(n - m);
}

MixedPolynomial ell_eps(int n, int m, double a, double eps) {
  if (!(n > m && m > 0) || !(a > 0.0) || !(eps >= 0.0))
    throw Error(ErrorCode::BadParameters, "ell_eps needs n > m > 0, a > 0, eps >= 0");
  const P zn = shifted_power(n, a);
  return P::monomial(m, m) * zn - z_pow(n) - P::constant(eps) * zn;
}

MixedPolynomial phi_t(const MixedPolynomial& lens, int m, double t) {
  if (m < 1 || !(t >= 0.0)) throw Error(ErrorCode::BadParameters, "phi_t needs m >= 1 and t >= 0");
  const DegreeInfo d = lens.degrees();
  if (d.deg_zbar != 1 || !d.in_l) throw Error(ErrorCode::NotInClass, "phi_t needs a lens zbar q(z) - p(z)");
  if (lens.coefficient(0, 0) == Complex(0.0)) throw Error(ErrorCode::ZeroIsRoot, "the lens vanishes at z = 0");
  if (t == 0.0) return lens;
  MixedPolynomial::TermMap q;
  for (const auto& [e, c] : lens.terms())
    if (e.mu == 1) q[{e.nu, 0}] = c;
  return lens - (zb_pow(m) * MixedPolynomial(std::move(q))).scaled(t);
}

double default_a(int n, int m) { return 2 * m < n ? 0.7 : 0.5; }

double default_eps(int n, int m, double a) {
  const double an = std::pow(a, n);
  // Roots near 0 of ell_eps sit at |z| ~ eps^(1/2m); the unperturbed ones
  // nearest to 0 at |z| ~ a^(n/(n-2m)).
  if (2 * m < n) return 1e-3 * std::pow(an, 2.0 * m / (n - 2 * m));
  return 1e-3 * an;
}

MixedPolynomial rhie(int n, double a, double eps) {
  switch (n) {
    case 2: return generalized_lens({-1.0 / 30.0, 1.0}, {-1.0 / 2.0, 0.0, 1.0}, 1);
    case 3: return generalized_lens({-1.0 / 1000.0, 0.0, 1.0}, {-1.0 / 8.0, 0.0, 0.0, 1.0}, 1);
    case 4: return rhie4();
    default: break;
  }
  if (n < 2) throw Error(ErrorCode::BadParameters, "rhie needs n >= 2");
  return ell_eps(n - 1, 1, a, eps < 0.0 ? default_eps(n - 1, 1, a) : eps);
}

MixedPolynomial product_family(int n, int m, int a) {
  if (!(0 <= a && a <= m && m < n)) throw Error(ErrorCode::BadParameters, "product needs 0 <= a <= m < n");
  const P first = P::monomial(n - a, m - a) - P::constant(1.0);
  if (a == 0) return first;
  return first * (z_pow(a) - P::constant(2.0)) * (zb_pow(a) - P::constant(3.0));
}

MixedPolynomial chebyshev_example(int n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "chebyshev needs n >= 1");
  const Complex i(0.0, 1.0);
  const P x = (P::z() + P::zbar()).scaled(0.5);
  const P y = (P::z() - P::zbar()).scaled(-0.5 * i);
  auto cheb = [n](const P& s) {
    P prev = P::constant(1.0), cur = s;
    for (int k = 1; k < n; ++k) {
      P next = (s * cur).scaled(2.0) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  };
  return y - cheb(x) + (x - cheb(y.scaled(b)).scaled(a)).scaled(i);
}

MixedPolynomial symmetric_power(int m, int preset) { return substitute_power(rhie(preset), m); }

PointMassConfig random_point_masses(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "need at least one mass");
  std::uniform_real_distribution<double> mass(0.2, 1.5), unit(0.0, 1.0);
  PointMassConfig cfg;
  while (static_cast<int>(cfg.alphas.size()) < n) {
    const Complex alpha = std::polar(1.5 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    const bool far = std::all_of(cfg.alphas.begin(), cfg.alphas.end(),
                                 [&](Complex other) { return std::abs(other - alpha) >= 0.05; });
    if (!far) continue;
    cfg.alphas.push_back(alpha);
    cfg.sigmas.emplace_back(mass(rng), 0.0);
  }
  return cfg;
}

MixedPolynomial elaborate(const LensFamilySpec& s) {
  auto eps_or_default = [&](int n, int m, double a) { return s.eps < 0.0 ? default_eps(n, m, a) : s.eps; };
  auto base_lens = [&] { return s.q.empty() ? rhie(s.preset, s.a, s.eps) : generalized_lens(s.p, s.q, 1); };
  switch (s.kind) {
    case FamilyKind::Generalized: return generalized_lens(s.p, s.q, s.m);
    case FamilyKind::Hs: return hs_lens(s.p, s.q, s.r);
    case FamilyKind::Ell: return ell(s.n, s.m, s.a);
    case FamilyKind::EllEps: return ell_eps(s.n, s.m, s.a, eps_or_default(s.n, s.m, s.a));
    case FamilyKind::PhiT: return phi_t(base_lens(), s.m, s.t);
    case FamilyKind::RhiePreset: return rhie(s.preset, s.a, s.eps);
    case FamilyKind::Product: return product_family(s.n, s.m, static_cast<int>(std::lround(s.a)));
    case FamilyKind::Chebyshev: return chebyshev_example(s.n, s.a, s.b);
    case FamilyKind::SymmetricPower: return substitute_power(base_lens(), s.m);
    case FamilyKind::PointMasses: return from_point_masses(s.sigmas, s.alphas);
  }
  throw Error(ErrorCode::BadParameters, "unhandled family kind");
}

nlohmann::json to_json(const LensFamilySpec& s) {
  nlohmann::json j{{"kind", to_string(s.kind)}, {"n", s.n},   {"m", s.m}, {"a", s.a},
                   {"eps", s.eps},              {"t", s.t},   {"b", s.b}, {"preset", s.preset}};
  if (!s.p.empty()) j["p"] = complex_list(s.p);
  if (!s.q.empty()) j["q"] = complex_list(s.q);
  if (!s.r.empty()) j["r"] = complex_list(s.r);
  if (!s.sigmas.empty()) j["sigmas"] = complex_list(s.sigmas);
  if (!s.alphas.empty()) j["alphas"] = complex_list(s.alphas);
  return j;
}

LensFamilySpec family_spec_from_json(const nlohmann::json& j) {
  try {
    LensFamilySpec s;
    s.kind = family_kind_from_string(j.at("kind").get<std::string>());
    s.n = j.value("n", s.n);
    s.m = j.value("m", s.m);
    s.a = j.value("a", s.a);
    s.eps = j.value("eps", s.eps);
    s.t = j.value("t", s.t);
    s.b = j.value("b", s.b);
    s.preset = j.value("preset", s.preset);
    if (j.contains("p")) s.p = complex_list_from(j["p"]);
    if (j.contains("q")) s.q = complex_list_from(j["q"]);
    if (j.contains("r")) s.r = complex_list_from(j["r"]);
    if (j.contains("sigmas")) s.sigmas = complex_list_from(j["sigmas"]);
    if (j.contains("alphas")) s.alphas = complex_list_from(j["alphas"]);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace lensroots
