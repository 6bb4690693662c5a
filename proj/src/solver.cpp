#include "lensroots/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>

#include "lensroots/error.hpp"
#include "lensroots/signed_index.hpp"

namespace lensroots {

namespace {

struct Centered {
  double cx, cy, rx, ry;
};

Centered center_of(const Box& b) {
  const double cx = 0.5 * b.x0 + 0.5 * b.x1;
  const double cy = 0.5 * b.y0 + 0.5 * b.y1;
  const double rx = round_up(std::max(cx - b.x0, b.x1 - cx));
  const double ry = round_up(std::max(cy - b.y0, b.y1 - cy));
  return {cx, cy, rx, ry};
}

struct Shifted {
  Centered c;
  IntervalPolynomial2 g, h;
};

Shifted shift_to(const IntervalPair& p, const Box& b) {
  const Centered c = center_of(b);
  return {c, p.g.shifted(c.cx, c.cy), p.h.shifted(c.cx, c.cy)};
}

KrawczykResult krawczyk_shifted(const Shifted& s, const Box& box) {
  using Status = KrawczykResult::Status;
  const auto& [cx, cy, rx, ry] = s.c;
  const Interval a = s.g.d_dx_range_centered(rx, ry);
  const Interval b = s.g.d_dy_range_centered(rx, ry);
  const Interval c = s.h.d_dx_range_centered(rx, ry);
  const Interval d = s.h.d_dy_range_centered(rx, ry);
  const double m00 = a.mid(), m01 = b.mid(), m10 = c.mid(), m11 = d.mid();
  const double det = m00 * m11 - m01 * m10;
  const double scale = std::abs(m00 * m11) + std::abs(m01 * m10);
  if (!(std::abs(det) > 1e-14 * scale) || !std::isfinite(det)) return {};
  const double y00 = m11 / det, y01 = -m01 / det, y10 = -m10 / det, y11 = m00 / det;
  const Interval f0 = s.g.at(0, 0), f1 = s.h.at(0, 0);
  const Interval yf0 = Interval(y00) * f0 + Interval(y01) * f1;
  const Interval yf1 = Interval(y10) * f0 + Interval(y11) * f1;
  const Interval a00 = Interval(1.0) - (Interval(y00) * a + Interval(y01) * c);
  const Interval a01 = -(Interval(y00) * b + Interval(y01) * d);
  const Interval a10 = -(Interval(y10) * a + Interval(y11) * c);
  const Interval a11 = Interval(1.0) - (Interval(y10) * b + Interval(y11) * d);
  const Interval dx = Interval::symmetric(rx), dy = Interval::symmetric(ry);
  KrawczykResult r;
  r.kx = Interval(cx) - yf0 + a00 * dx + a01 * dy;
  r.ky = Interval(cy) - yf1 + a10 * dx + a11 * dy;
  if (!std::isfinite(r.kx.lo) || !std::isfinite(r.kx.hi) || !std::isfinite(r.ky.lo) || !std::isfinite(r.ky.hi))
    return {};
  const Interval bx(box.x0, box.x1), by(box.y0, box.y1);
  if (r.kx.disjoint(bx) || r.ky.disjoint(by)) {
    r.status = Status::Empty;
  } else if (r.kx.strictly_inside(bx) && r.ky.strictly_inside(by)) {
    r.status = Status::Contained;
  }
  return r;
}

// Newton on the realified system, written with Wirtinger derivatives:
// f + f_z d + f_zbar conj(d) = 0  =>  d = (conj(f) f_zbar - f conj(f_z)) / J.
struct NewtonSystem {
  MixedPolynomial f, fz, fzb;

  explicit NewtonSystem(const MixedPolynomial& p) : f(p), fz(p.d_dz()), fzb(p.d_dzbar()) {}

  std::optional<Complex> refine(Complex z, int max_iter) const {
    Complex fv = f.evaluate(z);
    for (int it = 0; it < max_iter; ++it) {
      if (fv == Complex(0.0)) return z;
      const Complex a = fz.evaluate(z), b = fzb.evaluate(z);
      const double jac = std::norm(a) - std::norm(b);
      if (jac == 0.0 || !std::isfinite(jac)) return std::nullopt;
      Complex step = (std::conj(fv) * b - fv * std::conj(a)) / jac;
      Complex next = z + step;
      Complex fn = f.evaluate(next);
      for (int damp = 0; damp < 12 && !(std::abs(fn) < std::abs(fv)); ++damp) {
        step *= 0.5;
        next = z + step;
        fn = f.evaluate(next);
      }
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) return std::nullopt;
      const bool small = std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z));
      z = next;
      fv = fn;
      if (small) return z;
    }
    return std::nullopt;
  }
};

struct Certificate {
  Box uniqueness;
  Interval kx, ky;
};

enum class Outcome { Excluded, Certified, Covered, Split, Unresolved };

struct BoxTask {
  Box box;
  int depth = 0;
};

struct BoxResult {
  Outcome outcome = Outcome::Unresolved;
  std::optional<Certificate> cert;
};

class Isolator {
 public:
  Isolator(const MixedPolynomial& f, const Box& domain, const SolverConfig& cfg)
      : f_(f), domain_(domain), cfg_(cfg), pair_(realify_interval(f)), newton_(f) {}

  RootInventory run();

 private:
  BoxResult process(const BoxTask& task) const;
  std::optional<Certificate> tighten(const Box& uniqueness, Interval kx, Interval ky) const;
  bool covered(const Box& b) const;
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) const;
  std::vector<Certificate> deduplicate(std::vector<Certificate> certs, bool& ambiguous) const;

  const MixedPolynomial& f_;
  Box domain_;
  SolverConfig cfg_;
  IntervalPair pair_;
  NewtonSystem newton_;
  std::optional<MultipleRoot> origin_;
  std::vector<Certificate> certified_;
};

void Isolator::parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) const {
  unsigned threads = cfg_.threads ? cfg_.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

bool Isolator::covered(const Box& b) const {
  if (origin_) {
    const double r = origin_->radius;
    auto in = [r](double x, double y) { return std::hypot(x, y) <= r; };
    if (in(b.x0, b.y0) && in(b.x0, b.y1) && in(b.x1, b.y0) && in(b.x1, b.y1)) return true;
  }
  return std::any_of(certified_.begin(), certified_.end(),
                     [&b](const Certificate& c) { return c.uniqueness.contains(b); });
}

std::optional<Certificate> Isolator::tighten(const Box& uniqueness, Interval kx, Interval ky) const {
  kx = intersect(kx, Interval(uniqueness.x0, uniqueness.x1));
  ky = intersect(ky, Interval(uniqueness.y0, uniqueness.y1));
  auto width = [&] { return std::max(kx.width(), ky.width()); };
  for (int it = 0; it < 16; ++it) {
    const double scale = std::max({1.0, std::abs(kx.mid()), std::abs(ky.mid())});
    if (width() <= 1e-4 * cfg_.tol * scale) break;
    const Box b{kx.lo, kx.hi, ky.lo, ky.hi};
    const KrawczykResult r = krawczyk_shifted(shift_to(pair_, b), b);
    if (r.status == KrawczykResult::Status::Inconclusive && r.kx.lo == 0.0 && r.kx.hi == 0.0) break;
    const double before = width();
    kx = intersect(kx, r.kx);
    ky = intersect(ky, r.ky);
    if (kx.lo > kx.hi || ky.lo > ky.hi) return std::nullopt;  // cannot happen for a true root
    if (width() > 0.5 * before) break;
  }
  // Slow contraction: certify a small box around the Newton point instead.
  const double scale = std::max({1.0, std::abs(kx.mid()), std::abs(ky.mid())});
  if (width() > 1e-4 * cfg_.tol * scale) {
    if (auto p = newton_.refine({kx.mid(), ky.mid()}, 30); p && kx.contains(p->real()) && ky.contains(p->imag())) {
      for (double d = 1e-13 * scale; d < 0.25 * width(); d *= 10.0) {
        const Box b{p->real() - d, p->real() + d, p->imag() - d, p->imag() + d};
        if (!(kx.lo <= b.x0 && b.x1 <= kx.hi && ky.lo <= b.y0 && b.y1 <= ky.hi)) break;
        const KrawczykResult r = krawczyk_shifted(shift_to(pair_, b), b);
        if (r.status == KrawczykResult::Status::Contained) {
          kx = intersect(r.kx, Interval(b.x0, b.x1));
          ky = intersect(r.ky, Interval(b.y0, b.y1));
          break;
        }
      }
    }
  }
  return Certificate{uniqueness, kx, ky};
}

BoxResult Isolator::process(const BoxTask& task) const {
  using Status = KrawczykResult::Status;
  const Box& box = task.box;
  if (covered(box)) return {Outcome::Covered, std::nullopt};

  const Shifted s = shift_to(pair_, box);
  const Interval gr = s.g.range_centered(s.c.rx, s.c.ry);
  const Interval hr = s.h.range_centered(s.c.rx, s.c.ry);
  if (!gr.contains_zero() || !hr.contains_zero()) return {Outcome::Excluded, std::nullopt};

  const KrawczykResult k = krawczyk_shifted(s, box);
  if (k.status == Status::Empty) return {Outcome::Excluded, std::nullopt};
  if (k.status == Status::Contained) {
    if (auto cert = tighten(box, k.kx, k.ky)) return {Outcome::Certified, cert};
  }

  // A root on or near an edge never lands strictly inside a subdivision box;
  // retry on a box around the Newton point that still covers this one.
  if (task.depth >= 2) {
    if (auto p = newton_.refine(box.center(), 30)) {
      const double w = box.width(), h = box.height();
      const Box near{box.x0 - w, box.x1 + w, box.y0 - h, box.y1 + h};
      if (near.owns(*p)) {
        const double wx = 1.25 * std::max(p->real() - box.x0, box.x1 - p->real());
        const double wy = 1.25 * std::max(p->imag() - box.y0, box.y1 - p->imag());
        const Box inflated{p->real() - wx, p->real() + wx, p->imag() - wy, p->imag() + wy};
        const KrawczykResult ki = krawczyk_shifted(shift_to(pair_, inflated), inflated);
        if (ki.status == Status::Contained) {
          if (auto cert = tighten(inflated, ki.kx, ki.ky)) return {Outcome::Certified, cert};
        }
      }
    }
  }
  if (task.depth >= cfg_.max_depth) return {Outcome::Unresolved, std::nullopt};
  return {Outcome::Split, std::nullopt};
}

std::vector<Certificate> Isolator::deduplicate(std::vector<Certificate> certs, bool& ambiguous) const {
  // Two enclosures with disjoint intervals hold different roots; an enclosure
  // inside another certificate's uniqueness box is that same root.
  std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) {
    return std::tie(a.kx.lo, a.ky.lo, a.kx.hi, a.ky.hi) < std::tie(b.kx.lo, b.ky.lo, b.kx.hi, b.ky.hi);
  });
  std::vector<Certificate> out;
  for (const auto& c : certs) {
    bool duplicate = false;
    for (const auto& o : out) {
      if (c.kx.disjoint(o.kx) || c.ky.disjoint(o.ky)) continue;
      const Box ck{c.kx.lo, c.kx.hi, c.ky.lo, c.ky.hi};
      const Box ok{o.kx.lo, o.kx.hi, o.ky.lo, o.ky.hi};
      if (o.uniqueness.contains(ck) || c.uniqueness.contains(ok)) {
        duplicate = true;
        break;
      }
      ambiguous = true;
    }
    if (!duplicate) out.push_back(c);
  }
  return out;
}

RootInventory Isolator::run() {
  RootInventory inv;
  inv.domain = domain_;
  origin_ = certify_exact_origin_root(f_);

  std::vector<BoxTask> frontier{{domain_, 0}};
  std::vector<Box> unresolved;
  while (!frontier.empty()) {
    if (frontier.size() > cfg_.max_frontier) {
      for (const auto& t : frontier) unresolved.push_back(t.box);
      break;
    }
    std::vector<BoxResult> results(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) { results[i] = process(frontier[i]); });
    inv.boxes_processed += frontier.size();

    std::vector<BoxTask> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const BoxTask& t = frontier[i];
      switch (results[i].outcome) {
        case Outcome::Excluded:
        case Outcome::Covered: break;
        case Outcome::Certified: certified_.push_back(*results[i].cert); break;
        case Outcome::Unresolved: unresolved.push_back(t.box); break;
        case Outcome::Split: {
          const Complex c = t.box.center();
          const double mx = c.real(), my = c.imag();
          next.push_back({{t.box.x0, mx, t.box.y0, my}, t.depth + 1});
          next.push_back({{mx, t.box.x1, t.box.y0, my}, t.depth + 1});
          next.push_back({{t.box.x0, mx, my, t.box.y1}, t.depth + 1});
          next.push_back({{mx, t.box.x1, my, t.box.y1}, t.depth + 1});
          break;
        }
      }
    }
    frontier = std::move(next);
  }

  // Boxes left behind that a later certificate covers are resolved.
  std::erase_if(unresolved, [this](const Box& b) { return covered(b); });

  bool ambiguous = false;
  const auto certs = deduplicate(certified_, ambiguous);
  for (const auto& c : certs) {
    CertifiedRoot r;
    r.center = {c.kx.mid(), c.ky.mid()};
    if (!domain_.owns(r.center)) continue;
    r.enclosure = {c.kx.lo, c.kx.hi, c.ky.lo, c.ky.hi};
    r.uniqueness = c.uniqueness;
    r.radius = round_up(std::hypot(c.kx.width(), c.ky.width()) * 0.5);
    if (r.radius == 0.0) r.radius = std::numeric_limits<double>::denorm_min();
    r.residual = std::abs(f_.evaluate(r.center));
    const Box disk_box{r.center.real() - r.radius, r.center.real() + r.radius, r.center.imag() - r.radius,
                       r.center.imag() + r.radius};
    const Shifted s = shift_to(pair_, disk_box);
    const Interval jac = s.g.d_dx_range_centered(s.c.rx, s.c.ry) * s.h.d_dy_range_centered(s.c.rx, s.c.ry) -
                         s.g.d_dy_range_centered(s.c.rx, s.c.ry) * s.h.d_dx_range_centered(s.c.rx, s.c.ry);
    if (jac.lo > 0.0) {
      r.orientation = 1;
    } else if (jac.hi < 0.0) {
      r.orientation = -1;
    } else {
      r.orientation = wirtinger_jacobian(f_, r.center) > 0.0 ? 1 : -1;
    }
    r.multiplicity = r.orientation;
    inv.roots.push_back(r);
  }
  std::sort(inv.roots.begin(), inv.roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    return std::make_pair(a.center.real(), a.center.imag()) < std::make_pair(b.center.real(), b.center.imag());
  });

  if (origin_ && domain_.owns(origin_->center)) inv.multiple_roots.push_back(*origin_);

  // Connected clusters of unresolved boxes.
  std::vector<std::size_t> parent(unresolved.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::size_t> order(unresolved.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return unresolved[a].x0 < unresolved[b].x0; });
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size() && unresolved[order[b]].x0 <= unresolved[order[a]].x1; ++b)
      if (unresolved[order[a]].touches(unresolved[order[b]])) parent[find(order[a])] = find(order[b]);
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < unresolved.size(); ++i) clusters[find(i)].push_back(i);
  std::vector<Box> hulls;
  for (const auto& [root, members] : clusters) {
    Box hullb = unresolved[members.front()];
    for (auto i : members) {
      const Box& b = unresolved[i];
      hullb = {std::min(hullb.x0, b.x0), std::max(hullb.x1, b.x1), std::min(hullb.y0, b.y0), std::max(hullb.y1, b.y1)};
    }
    hulls.push_back(hullb);
  }
  // Many boxes packed into a speck are a multiple root blurred by rounding;
  // many boxes spread out are a curve.
  const double speck = kPointClusterDiameter * std::max(domain_.width(), domain_.height());
  std::size_t k = 0;
  for (const auto& [root, members] : clusters) {
    const Box& h = hulls[k++];
    if (members.size() > cfg_.chain_threshold && std::hypot(h.width(), h.height()) > speck)
      throw Error(ErrorCode::NonIsolatedZeroSet, "unresolved boxes form a chain of " + std::to_string(members.size()) +
                                                     " boxes; the zero set is not isolated");
  }

  bool all_counted = !ambiguous;
  for (std::size_t c = 0; c < hulls.size(); ++c) {
    const Box& hullb = hulls[c];
    MultipleRoot m;
    m.center = hullb.center();
    m.radius = 0.75 * std::hypot(hullb.width(), hullb.height());
    // The annulus between the cluster and the circle was excluded, so the
    // circle may grow until it meets another root or cluster.
    auto clear = [&](double r) {
      for (const auto& root : inv.roots)
        if (std::abs(root.center - m.center) <= r + root.radius) return false;
      for (std::size_t o = 0; o < hulls.size(); ++o)
        if (o != c && std::abs(hulls[o].center() - m.center) <= r + std::hypot(hulls[o].width(), hulls[o].height()))
          return false;
      return true;
    };
    bool done = false;
    for (int attempt = 0; attempt < 40 && !done && clear(m.radius); ++attempt) {
      try {
        m.multiplicity = local_multiplicity(f_, m.center, m.radius);
        done = true;
      } catch (const Error&) {
        m.radius *= 2.0;
      }
    }
    if (!done) {
      m.multiplicity = 0;
      all_counted = false;
    }
    inv.multiple_roots.push_back(m);
  }
  inv.unresolved_boxes = std::move(unresolved);

  inv.all_simple = inv.multiple_roots.empty();
  inv.rho = static_cast<int>(inv.roots.size());
  inv.signed_sum = 0;
  for (const auto& r : inv.roots) inv.signed_sum += r.orientation;
  for (const auto& m : inv.multiple_roots) {
    inv.signed_sum += m.multiplicity;
    if (cfg_.count_multiplicity) inv.rho += std::abs(m.multiplicity);
  }
  inv.rho_nonzero = inv.rho;
  if (f_.coefficient(0, 0) == Complex(0.0)) {
    for (const auto& r : inv.roots)
      if (r.enclosure.x0 <= 0.0 && 0.0 <= r.enclosure.x1 && r.enclosure.y0 <= 0.0 && 0.0 <= r.enclosure.y1)
        --inv.rho_nonzero;
    if (cfg_.count_multiplicity)
      for (const auto& m : inv.multiple_roots)
        if (m.exact) inv.rho_nonzero -= std::abs(m.multiplicity);
  }
  inv.certified = !ambiguous && (inv.unresolved_boxes.empty() || (cfg_.count_multiplicity && all_counted));
  return inv;
}

}  // namespace

std::pair<Interval, Interval> range_over(const IntervalPair& p, const Box& box) {
  const Shifted s = shift_to(p, box);
  return {s.g.range_centered(s.c.rx, s.c.ry), s.h.range_centered(s.c.rx, s.c.ry)};
}

KrawczykResult krawczyk(const IntervalPair& p, const Box& box) { return krawczyk_shifted(shift_to(p, box), box); }

std::optional<Complex> newton_refine(const MixedPolynomial& f, Complex z0, int max_iter) {
  return NewtonSystem(f).refine(z0, max_iter);
}

double circle_min_lower_bound(const MixedPolynomial& h) {
  constexpr double pi = std::numbers::pi;
  if (h.is_zero()) return 0.0;
  // On |z| = 1, h = sum_k c_k e^{ikt} with k = nu - mu.
  std::map<int, Complex> harmonics;
  double total = 0.0, second = 0.0;
  for (const auto& [e, c] : h.terms()) harmonics[e.nu - e.mu] += c;
  for (const auto& [k, c] : harmonics) {
    total += std::abs(c);
    second += std::abs(c) * k * k;
  }
  auto value_and_slope = [&](double t) {
    Complex v = 0.0, d = 0.0;
    for (const auto& [k, c] : harmonics) {
      const Complex term = c * std::polar(1.0, k * t);
      v += term;
      d += Complex(0.0, k) * term;
    }
    return std::pair{std::abs(v), std::abs(d)};
  };
  // Bound on an arc of half-width r around t: |h| >= |h(t)| - |h'(t)| r - second r^2 / 2.
  const double slack = 1e-12 * total;
  struct Arc {
    double t, r;
  };
  std::vector<Arc> stack;
  const int start = 64 * (1 + harmonics.rbegin()->first - harmonics.begin()->first);
  for (int i = 0; i < start; ++i) stack.push_back({2 * pi * (i + 0.5) / start, pi / start});
  double best = std::numeric_limits<double>::infinity();
  std::size_t budget = 1u << 22;
  while (!stack.empty()) {
    const Arc a = stack.back();
    stack.pop_back();
    const auto [v, d] = value_and_slope(a.t);
    if (v <= slack) return 0.0;
    const double bound = v - d * a.r - 0.5 * second * a.r * a.r - slack;
    if (bound > 0.0) {
      best = std::min(best, bound);
      continue;
    }
    if (--budget == 0 || a.r < 1e-13) return 0.0;
    stack.push_back({a.t - 0.5 * a.r, 0.5 * a.r});
    stack.push_back({a.t + 0.5 * a.r, 0.5 * a.r});
  }
  return best;
}

std::optional<MultipleRoot> certify_exact_origin_root(const MixedPolynomial& f) {
  if (f.is_zero() || f.coefficient(0, 0) != Complex(0.0)) return std::nullopt;
  const int k = f.lowest_degree();
  const MixedPolynomial low = f.homogeneous_part(k);
  if (k == 1) {
    const double jac = std::norm(low.coefficient(1, 0)) - std::norm(low.coefficient(0, 1));
    if (std::abs(jac) > 1e-12 * low.max_coefficient_modulus() * low.max_coefficient_modulus()) return std::nullopt;
  }
  const double m = circle_min_lower_bound(low);
  if (m <= 0.0) return std::nullopt;
  const int d = f.degrees().deg;
  std::vector<double> s(d + 1, 0.0);
  for (const auto& [e, c] : f.terms()) s[e.nu + e.mu] += std::abs(c);
  // On 0 < |w| <= r: |low(w)| >= m |w|^k > sum_{j>k} s_j |w|^j when
  // m > sum_{j>k} s_j r^(j-k).
  auto ok = [&](double r) {
    double rest = 0.0;
    for (int j = k + 1; j <= d; ++j) rest += s[j] * pow_up(r, j - k);
    return m > rest * (1.0 + 1e-12);
  };
  double r = 1.0;
  while (!ok(r)) {
    r *= 0.5;
    if (r < 1e-300) return std::nullopt;
  }
  double hi = 2.0 * r;
  for (int it = 0; it < 20; ++it) {
    const double mid = 0.5 * (r + hi);
    (ok(mid) ? r : hi) = mid;
  }
  MultipleRoot out;
  out.center = 0.0;
  out.radius = r;
  out.multiplicity = winding_number(low, 0.0, 1.0);
  out.exact = true;
  return out;
}

double root_bound(const MixedPolynomial& f) {
  const TopFactorization tf = top_part_factor(f);
  if (!is_admissible(tf)) throw Error(ErrorCode::NotAdmissible, "root_bound needs a polynomial admissible at infinity");
  const int d = tf.degree;
  const double m = circle_min_lower_bound(f.homogeneous_part(d));
  if (m <= 0.0) throw Error(ErrorCode::NotAdmissible, "top-degree part vanishes on the unit circle");
  std::vector<double> s(d + 1, 0.0);
  for (const auto& [e, c] : f.terms()) s[e.nu + e.mu] += std::abs(c);
  // |f(z)| >= m |z|^d - sum_{k<d} s_k |z|^k > 0 for |z| >= R once
  // m > sum_k s_k R^(k-d); the right side decreases in R.
  double r = 0.0;
  for (int k = 0; k < d; ++k)
    if (s[k] > 0.0) r = std::max(r, std::pow(s[k] / m, 1.0 / (d - k)));
  if (r <= 0.0) r = 1.0;
  auto ok = [&](double R) {
    double rest = 0.0;
    for (int k = 0; k < d; ++k) rest += s[k] / pow_up(R, d - k);
    return m > rest * (1.0 + 1e-12);
  };
  while (!ok(r)) r *= 2.0;
  return r;
}

RootInventory isolate_roots(const MixedPolynomial& f, const Box& box, const SolverConfig& cfg) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  return Isolator(f, box, cfg).run();
}

RootInventory solve(const MixedPolynomial& f, const SolverConfig& cfg) {
  const double r = root_bound(f);
  // Off-centre so the axes, where symmetric families put many roots, are not
  // subdivision edges.
  const Box domain{-1.0371 * r, 1.0113 * r, -1.0257 * r, 1.0191 * r};
  return isolate_roots(f, domain, cfg);
}

namespace {
int certified_rho(const RootInventory& inv) {
  if (!inv.certified)
    throw Error(ErrorCode::UncertifiedCount, std::to_string(inv.unresolved_boxes.size()) + " unresolved boxes remain");
  return inv.rho;
}
}  // namespace

int rho(const MixedPolynomial& f, const SolverConfig& cfg) { return certified_rho(solve(f, cfg)); }

int rho(const MixedPolynomial& f, const Box& box, const SolverConfig& cfg) {
  return certified_rho(isolate_roots(f, box, cfg));
}

}  // namespace lensroots
