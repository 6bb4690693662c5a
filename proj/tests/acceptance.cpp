// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lensroots/error.hpp"
#include "lensroots/lens_families.hpp"
#include "lensroots/milnor.hpp"
#include "lensroots/signed_index.hpp"
#include "lensroots/solver.hpp"
#include "lensroots/symmetry.hpp"
#include "oracles.hpp"

using namespace lensroots;

namespace {

constexpr double kRayTol = 1e-8;
constexpr double kEulerTol = 1e-9;
constexpr double kPresetSeconds = 30.0;
constexpr double kChebyshevSeconds = 120.0;
constexpr int kRoundTrips = 100;
constexpr int kEulerSamples = 50;
constexpr int kPointMassConfigs = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every polynomial solved in criteria 1-9, for the beta check.
struct Solved {
  std::string label;
  MixedPolynomial f;
  RootInventory inv;
};
std::vector<Solved> g_solved;

// Members of L(n+1; n, 1) with certified counts, for the lens-range check.
struct LensCount {
  std::string label;
  int n;
  int rho;
};
std::vector<LensCount> g_lens_counts;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

RootInventory run_solver(const std::string& label, const MixedPolynomial& f, Outcome& out) {
  try {
    auto inv = solve(f);
    if (!inv.certified || !inv.unresolved_boxes.empty())
      out.fail(label + ": uncertified (" + std::to_string(inv.unresolved_boxes.size()) + " unresolved boxes)");
    g_solved.push_back({label, f, inv});
    const auto d = f.degrees();
    if (d.in_l && d.deg_zbar == 1 && inv.certified) g_lens_counts.push_back({label, d.deg_z, inv.rho});
    return inv;
  } catch (const Error& e) {
    out.fail(label + ": " + e.what());
    return {};
  }
}

void expect_count(Outcome& out, const std::string& label, int got, int want) {
  if (got != want) out.fail(label + ": rho " + std::to_string(got) + " != " + std::to_string(want));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Sturm totals and ray constraint for a symmetric-family run.
struct SymmetryCheck {
  std::string label;
  int n, m;
  double a, eps;
  RootInventory inv;
};
std::vector<SymmetryCheck> g_symmetric;

Outcome criterion_rhie() {
  Outcome out;
  const int want[] = {5, 10, 15};
  for (int k = 0; k < 3; ++k) {
    const int preset = k + 2;
    const auto t0 = Clock::now();
    const auto inv = run_solver("f" + std::to_string(preset), rhie(preset), out);
    const double s = seconds_since(t0);
    expect_count(out, "f" + std::to_string(preset), inv.rho, want[k]);
    if (s > kPresetSeconds) out.fail("f" + std::to_string(preset) + " took " + fmt(s) + " s");
    if (out.pass) out.detail << "f" << preset << "=" << inv.rho << " ";
  }
  return out;
}

Outcome ell_counts(const std::vector<std::pair<int, int>>& nm, const std::vector<double>& as, int factor) {
  Outcome out;
  for (auto [n, m] : nm)
    for (double a : as) {
      const std::string label = "ell(" + std::to_string(n) + "," + std::to_string(m) + "," + fmt(a) + ")";
      const auto inv = run_solver(label, ell(n, m, a), out);
      expect_count(out, label, inv.rho_nonzero, factor * n);
      g_symmetric.push_back({label, n, m, a, 0.0, inv});
    }
  if (out.pass) out.detail << nm.size() * as.size() << " runs, all " << factor << "n off the origin";
  return out;
}

Outcome ell_eps_counts(const std::vector<std::pair<int, int>>& nm, int factor) {
  Outcome out;
  const double decade[] = {std::pow(10.0, -0.5), 1.0, std::pow(10.0, 0.5)};
  int runs = 0;
  for (auto [n, m] : nm) {
    const double a = default_a(n, m);
    const double eps0 = default_eps(n, m, a);
    for (double s : decade) {
      const double eps = eps0 * s;
      const std::string label =
          "ell_eps(" + std::to_string(n) + "," + std::to_string(m) + "," + fmt(a) + "," + fmt(eps) + ")";
      const auto inv = run_solver(label, ell_eps(n, m, a, eps), out);
      expect_count(out, label, inv.rho, factor * n);
      g_symmetric.push_back({label, n, m, a, eps, inv});
      ++runs;
    }
  }
  if (out.pass) out.detail << runs << " runs over a decade of eps, all " << factor << "n";
  return out;
}

Outcome criterion_symmetric_power() {
  Outcome out;
  for (int m = 1; m <= 3; ++m) {
    const auto inv = run_solver("f2(z^" + std::to_string(m) + ")", symmetric_power(m), out);
    expect_count(out, "m=" + std::to_string(m), inv.rho, 5 * m);
  }
  if (out.pass) out.detail << "5, 10, 15";
  return out;
}

Outcome criterion_phi_t() {
  Outcome out;
  for (auto [preset, k] : {std::pair{2, 5}, {3, 10}})
    for (int m : {2, 3})
      for (double t : {1e-2, 1e-3}) {
        const std::string label =
            "phi_t(f" + std::to_string(preset) + ",m=" + std::to_string(m) + ",t=" + fmt(t) + ")";
        try {
          const auto inv = run_solver(label, phi_t(rhie(preset), m, t), out);
          expect_count(out, label, inv.rho, k + m - 1);
        } catch (const Error& e) {
          out.fail(label + ": " + e.what());
        }
      }
  if (out.pass) out.detail << "8 runs, all k+m-1";
  return out;
}

Outcome criterion_product() {
  Outcome out;
  for (int a = 0; a <= 2; ++a) {
    const auto inv = run_solver("f_a(" + std::to_string(a) + ")", product_family(3, 2, a), out);
    expect_count(out, "a=" + std::to_string(a), inv.rho, 3 - 2 + 2 * a);
  }
  if (out.pass) out.detail << "1, 3, 5";
  return out;
}

Outcome criterion_chebyshev() {
  Outcome out;
  for (int n : {2, 3, 5}) {
    const auto t0 = Clock::now();
    const std::string label = "chebyshev(" + std::to_string(n) + ")";
    const auto inv = run_solver(label, chebyshev_example(n), out);
    const double s = seconds_since(t0);
    expect_count(out, label, inv.rho, n * n);
    for (const auto& r : inv.roots) {
      const Box& e = r.enclosure;
      if (!(e.x0 > -1.0 && e.x1 < 1.0 && e.y0 > -1.0 && e.y1 < 1.0)) {
        out.fail(label + ": root outside (-1,1)^2");
        break;
      }
    }
    if (n == 5 && s > kChebyshevSeconds) out.fail(label + " took " + fmt(s) + " s");
    if (out.pass) out.detail << n << ":" << inv.rho << " (" << fmt(s) << " s) ";
  }
  return out;
}

Outcome criterion_beta() {
  Outcome out;
  int checked = 0;
  for (const auto& s : g_solved) {
    if (!s.inv.certified || !is_admissible(s.f)) continue;
    try {
      const int b = beta(s.f);
      const int w = winding_beta(s.f, root_bound(s.f));
      if (b != w) out.fail(s.label + ": beta " + std::to_string(b) + " vs winding " + std::to_string(w));
      if (b != s.inv.signed_sum)
        out.fail(s.label + ": beta " + std::to_string(b) + " vs signed sum " + std::to_string(s.inv.signed_sum));
      const auto d = s.f.degrees();
      if (d.in_m && b != d.deg_z - d.deg_zbar)
        out.fail(s.label + ": beta " + std::to_string(b) + " != deg_z - deg_zbar");
      ++checked;
    } catch (const Error& e) {
      out.fail(s.label + ": " + e.what());
    }
  }
  if (checked == 0) out.fail("nothing checked");
  if (out.pass) out.detail << checked << " polynomials";
  return out;
}

Outcome criterion_symmetry() {
  Outcome out;
  for (const auto& s : g_symmetric) {
    if (!s.inv.certified) {
      out.fail(s.label + ": no certified count to compare");
      continue;
    }
    try {
      const auto sc = symmetric_count(s.n, s.m, s.a, s.eps);
      if (sc.total != s.inv.rho_nonzero)
        out.fail(s.label + ": sturm " + std::to_string(sc.total) + " vs 2-D " + std::to_string(s.inv.rho_nonzero));
      const auto cfg = verify_ray_constraint(s.inv, s.n, kRayTol);
      if (static_cast<int>(cfg.assignments.size()) != s.inv.rho_nonzero)
        out.fail(s.label + ": " + std::to_string(cfg.assignments.size()) + " roots assigned to rays");
    } catch (const Error& e) {
      out.fail(s.label + ": " + e.what());
    }
  }
  if (out.pass) out.detail << g_symmetric.size() << " runs";
  return out;
}

Outcome criterion_milnor() {
  Outcome out;
  try {
    const auto r = invariants(rhie(2), {1, 1});
    if (r.polar_degree != 1 || r.radial_degree != 3 || r.link_components != 5 || r.chi_M != -3)
      out.fail("f2 report polar " + std::to_string(r.polar_degree) + " radial " + std::to_string(r.radial_degree) +
               " links " + std::to_string(r.link_components) + " chi " + std::to_string(r.chi_M));
  } catch (const Error& e) {
    out.fail(std::string("f2: ") + e.what());
  }
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> deg_n(1, 6), deg_m(0, 4), pick(0, 2);
  const Weight weights[] = {{1, 1}, {2, 1}, {3, 2}};
  double worst = 0.0;
  int trips = 0;
  for (int k = 0; k < kRoundTrips; ++k) {
    const int n = deg_n(rng), m = deg_m(rng);
    const auto f = oracle::random_class_member(rng, n, m);
    const Weight w = weights[pick(rng)];
    const auto F = homogenize(f, w);
    if (!(dehomogenize(F) == f)) out.fail("round trip failed at sample " + std::to_string(k));
    worst = std::max(worst, euler_identity_error(F, kEulerSamples, rng));
    ++trips;
  }
  if (worst > kEulerTol) out.fail("Euler identity error " + fmt(worst));
  if (out.pass) out.detail << trips << " round trips, Euler error " << fmt(worst);
  return out;
}

Outcome criterion_lens_range() {
  Outcome out;
  std::mt19937_64 rng(13);
  int uncertified = 0, runs = 0;
  std::set<std::pair<int, int>> seen;
  for (int n : {2, 3}) {
    for (int k = 0; k < kPointMassConfigs; ++k) {
      const auto cfg = random_point_masses(n, rng);
      const auto f = from_point_masses(cfg.sigmas, cfg.alphas);
      try {
        const auto inv = solve(f);
        ++runs;
        if (!inv.certified) {
          ++uncertified;
          continue;
        }
        g_lens_counts.push_back({"point masses n=" + std::to_string(n), n, inv.rho});
        seen.insert({n, inv.rho});
      } catch (const Error& e) {
        ++uncertified;
      }
    }
  }
  for (const auto& c : g_lens_counts) {
    const bool in_range = c.rho >= c.n - 1 && c.rho <= 5 * c.n - 5;
    const bool parity = (c.rho - (c.n - 1)) % 2 == 0;
    if (!in_range || !parity) out.fail(c.label + ": rho " + std::to_string(c.rho) + " for n=" + std::to_string(c.n));
  }
  if (uncertified > 0) out.fail(std::to_string(uncertified) + " configurations left uncertified");
  if (out.pass) {
    out.detail << runs << " configurations, " << g_lens_counts.size() << " counts; observed";
    for (auto [n, r] : seen) out.detail << " n" << n << ":" << r;
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Rhie presets 5, 10, 15", criterion_rhie},
      {2, "ell count 3n for n > 2m",
       [] { return ell_counts({{5, 1}, {4, 1}, {5, 2}, {7, 3}}, {0.3, 0.5, 0.7}, 3); }},
      {3, "ell count 2n for 2m >= n", [] { return ell_counts({{5, 4}, {6, 4}, {4, 2}}, {0.3, 0.5}, 2); }},
      {4, "bifurcated ell count 5n", [] { return ell_eps_counts({{5, 1}, {5, 2}, {7, 3}}, 5); }},
      {5, "bifurcated ell count 3n for 2m >= n", [] { return ell_eps_counts({{5, 4}, {6, 4}, {4, 2}}, 3); }},
      {6, "symmetric power 5m", criterion_symmetric_power},
      {7, "phi_t count k+m-1", criterion_phi_t},
      {8, "product family n-m+2a", criterion_product},
      {9, "Chebyshev n^2 roots in (-1,1)^2", criterion_chebyshev},
      {10, "beta = winding = signed sum", criterion_beta},
      {11, "Sturm counts and ray constraint", criterion_symmetry},
      {12, "Milnor invariants and homogenization", criterion_milnor},
      {13, "lens range and parity", criterion_lens_range},
  };
  int failures = 0;
  const auto start = Clock::now();
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o = c.run();
    std::printf("%s %2d  %-40s %6.1f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              seconds_since(start));
  return failures == 0 ? 0 : 1;
}
