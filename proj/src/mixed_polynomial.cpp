#include "lensroots/mixed_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lensroots/error.hpp"

namespace lensroots {

namespace {

std::vector<std::vector<double>> binomial_table(int n) {
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1.0;
    for (int k = 1; k <= i; ++k) c[i][k] = c[i - 1][k - 1] + (k <= i - 1 ? c[i - 1][k] : 0.0);
  }
  return c;
}

std::vector<Complex> powers(Complex base, int n) {
  std::vector<Complex> p(n + 1);
  p[0] = 1.0;
  for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * base;
  return p;
}

}  // namespace

MixedPolynomial::MixedPolynomial(TermMap terms) : terms_(std::move(terms)) { prune({}); }

MixedPolynomial MixedPolynomial::constant(Complex c) { return monomial(0, 0, c); }

MixedPolynomial MixedPolynomial::monomial(int nu, int mu, Complex c) {
  TermMap t;
  if (c != Complex(0.0)) t[{nu, mu}] = c;
  return MixedPolynomial(std::move(t));
}

MixedPolynomial MixedPolynomial::holomorphic(const std::vector<Complex>& coeffs) {
  TermMap t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != Complex(0.0)) t[{static_cast<int>(k), 0}] = coeffs[k];
  return MixedPolynomial(std::move(t));
}

MixedPolynomial MixedPolynomial::antiholomorphic(const std::vector<Complex>& coeffs) {
  TermMap t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != Complex(0.0)) t[{0, static_cast<int>(k)}] = coeffs[k];
  return MixedPolynomial(std::move(t));
}

Complex MixedPolynomial::coefficient(int nu, int mu) const {
  auto it = terms_.find({nu, mu});
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double MixedPolynomial::max_coefficient_modulus() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void MixedPolynomial::prune(const std::map<Exponent, double>& magnitude) {
  std::erase_if(terms_, [&magnitude](const auto& kv) {
    const double a = std::abs(kv.second);
    if (a == 0.0) return true;
    auto it = magnitude.find(kv.first);
    return it != magnitude.end() && a <= kRelativeDropTolerance * it->second;
  });
}

Complex MixedPolynomial::evaluate(Complex z) const {
  if (terms_.empty()) return 0.0;
  int dz = 0, dzb = 0;
  for (const auto& [e, c] : terms_) {
    dz = std::max(dz, e.nu);
    dzb = std::max(dzb, e.mu);
  }
  auto zp = powers(z, dz);
  auto zbp = powers(std::conj(z), dzb);
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c * zp[e.nu] * zbp[e.mu];
  return sum;
}

MixedPolynomial MixedPolynomial::d_dz() const {
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (e.nu > 0) t[{e.nu - 1, e.mu}] = c * static_cast<double>(e.nu);
  return MixedPolynomial(std::move(t));
}

MixedPolynomial MixedPolynomial::d_dzbar() const {
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (e.mu > 0) t[{e.nu, e.mu - 1}] = c * static_cast<double>(e.mu);
  return MixedPolynomial(std::move(t));
}

DegreeInfo MixedPolynomial::degrees() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degrees of the zero polynomial");
  DegreeInfo d;
  for (const auto& [e, c] : terms_) {
    d.deg_z = std::max(d.deg_z, e.nu);
    d.deg_zbar = std::max(d.deg_zbar, e.mu);
    d.deg = std::max(d.deg, e.nu + e.mu);
  }
  d.in_m = d.deg == d.deg_z + d.deg_zbar;
  const int m = d.deg_zbar;
  if (!d.in_m || m < 1) return d;

  d.in_l = std::all_of(terms_.begin(), terms_.end(), [m](const auto& kv) {
    return kv.first.mu == 0 || kv.first.mu == m;
  });

  // L^hs: the zbar-dependent part (rows mu >= 1) must be an outer product
  // r_mu q_nu. Compare every row against the heaviest one.
  std::vector<std::vector<Complex>> rows(m + 1, std::vector<Complex>(d.deg_z + 1, 0.0));
  for (const auto& [e, c] : terms_) rows[e.mu][e.nu] = c;
  int ref = m;
  auto row_norm = [&](int mu) {
    double s = 0.0;
    for (auto c : rows[mu]) s += std::norm(c);
    return std::sqrt(s);
  };
  for (int mu = 1; mu <= m; ++mu)
    if (row_norm(mu) > row_norm(ref)) ref = mu;
  const double ref_norm = row_norm(ref);
  int pivot = 0;
  for (int nu = 0; nu <= d.deg_z; ++nu)
    if (std::abs(rows[ref][nu]) > std::abs(rows[ref][pivot])) pivot = nu;
  bool rank_one = true;
  for (int mu = 1; mu <= m && rank_one; ++mu) {
    Complex ratio = rows[mu][pivot] / rows[ref][pivot];
    for (int nu = 0; nu <= d.deg_z; ++nu) {
      if (std::abs(rows[mu][nu] - ratio * rows[ref][nu]) > 1e-10 * ref_norm * std::max(1.0, std::abs(ratio))) {
        rank_one = false;
        break;
      }
    }
  }
  d.in_lhs = rank_one;
  return d;
}

MixedPolynomial MixedPolynomial::homogeneous_part(int d) const {
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (e.nu + e.mu == d) t[e] = c;
  return MixedPolynomial(std::move(t));
}

int MixedPolynomial::lowest_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "lowest degree of the zero polynomial");
  int low = terms_.begin()->first.nu + terms_.begin()->first.mu;
  for (const auto& [e, c] : terms_) low = std::min(low, e.nu + e.mu);
  return low;
}

MixedPolynomial MixedPolynomial::conjugate() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t[{e.mu, e.nu}] = std::conj(c);
  return MixedPolynomial(std::move(t));
}

MixedPolynomial MixedPolynomial::scaled(Complex c) const {
  TermMap t;
  for (const auto& [e, a] : terms_) t[e] = a * c;
  return MixedPolynomial(std::move(t));
}

MixedPolynomial MixedPolynomial::pow(int k) const {
  MixedPolynomial out = constant(1.0);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
  MixedPolynomial out;
  out.terms_ = a.terms_;
  std::map<Exponent, double> magnitude;
  for (const auto& [e, c] : b.terms_) {
    auto it = out.terms_.find(e);
    if (it != out.terms_.end()) magnitude[e] = std::abs(it->second) + std::abs(c);
    out.terms_[e] += c;
  }
  out.prune(magnitude);
  return out;
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) {
  MixedPolynomial out;
  out.terms_ = a.terms_;
  std::map<Exponent, double> magnitude;
  for (const auto& [e, c] : b.terms_) {
    auto it = out.terms_.find(e);
    if (it != out.terms_.end()) magnitude[e] = std::abs(it->second) + std::abs(c);
    out.terms_[e] -= c;
  }
  out.prune(magnitude);
  return out;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  MixedPolynomial out;
  std::map<Exponent, double> magnitude;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const Exponent e{ea.nu + eb.nu, ea.mu + eb.mu};
      out.terms_[e] += ca * cb;
      magnitude[e] += std::abs(ca) * std::abs(cb);
    }
  out.prune(magnitude);
  return out;
}

std::string MixedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  // Highest mixed degree first reads more naturally.
  std::vector<std::pair<Exponent, Complex>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = x.first.nu + x.first.mu, dy = y.first.nu + y.first.mu;
    if (dx != dy) return dx > dy;
    return x.first.nu > y.first.nu;
  });
  for (const auto& [e, c] : ordered) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real() << ',' << c.imag() << ')';
    if (e.nu > 0) os << " z^" << e.nu;
    if (e.mu > 0) os << " zb^" << e.mu;
  }
  return os.str();
}

MixedPolynomial arith(const MixedPolynomial& lhs, const MixedPolynomial& rhs, ArithOp op, Complex c) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Scale: return lhs.scaled(c);
    case ArithOp::Conjugate: return lhs.conjugate();
  }
  return lhs;
}

MixedPolynomial substitute_power(const MixedPolynomial& f, int m) {
  if (m < 1) throw Error(ErrorCode::BadParameters, "substitute_power needs m >= 1");
  MixedPolynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) t[{e.nu * m, e.mu * m}] = c;
  return MixedPolynomial(std::move(t));
}

double wirtinger_jacobian(const MixedPolynomial& f, Complex z) {
  return std::norm(f.d_dz().evaluate(z)) - std::norm(f.d_dzbar().evaluate(z));
}

MixedPolynomial taylor_shift(const MixedPolynomial& f, Complex alpha) {
  if (f.is_zero()) return f;
  const DegreeInfo d = f.degrees();
  const int n = std::max(d.deg_z, d.deg_zbar);
  const auto binom = binomial_table(n);
  const auto ap = powers(alpha, d.deg_z);
  const auto abp = powers(std::conj(alpha), d.deg_zbar);
  MixedPolynomial::TermMap t;
  for (const auto& [e, c] : f.terms())
    for (int k = 0; k <= e.nu; ++k)
      for (int l = 0; l <= e.mu; ++l)
        t[{k, l}] += c * binom[e.nu][k] * ap[e.nu - k] * binom[e.mu][l] * abp[e.mu - l];
  return MixedPolynomial(std::move(t));
}

}  // namespace lensroots
