#include "lensroots/sturm.hpp"

#include <cmath>

#include "lensroots/error.hpp"

namespace lensroots {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::from_doubles(const std::vector<double>& coeffs) {
  std::vector<mpq_class> c;
  c.reserve(coeffs.size());
  for (double v : coeffs) {
    if (!std::isfinite(v)) throw Error(ErrorCode::BadParameters, "non-finite coefficient");
    c.emplace_back(v);
  }
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::remainder(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::BadParameters, "division by the zero polynomial");
  std::vector<mpq_class> r = c_;
  const int dd = divisor.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    const mpq_class factor = r[k] / divisor.leading();
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= factor * divisor.c_[j];
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(dd)));
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RationalPolynomial next = -seq[seq.size() - 2].remainder(seq.back());
    if (next.is_zero()) break;
    seq.push_back(std::move(next));
  }
  if (seq.back().is_zero()) seq.pop_back();
  if (seq.back().degree() > 0)
    throw Error(ErrorCode::NotSquarefree, "gcd(p, p') has degree " + std::to_string(seq.back().degree()));
  return seq;
}

namespace {

int sign_at(const RationalPolynomial& q, double x) {
  if (std::isinf(x)) {
    const int lead = sgn(q.leading());
    return (x < 0 && q.degree() % 2 == 1) ? -lead : lead;
  }
  return sgn(q.evaluate(mpq_class(x)));
}

int sign_changes(const std::vector<RationalPolynomial>& seq, double x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const RationalPolynomial& p, double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) throw Error(ErrorCode::BadParameters, "need lo < hi");
  const auto seq = sturm_sequence(p);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

int sturm_count(const std::vector<double>& coeffs, double lo, double hi) {
  return sturm_count(RationalPolynomial::from_doubles(coeffs), lo, hi);
}

}  // namespace lensroots
