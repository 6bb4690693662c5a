#include "lensroots/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lensroots/lens_families.hpp"
#include "lensroots/milnor.hpp"
#include "lensroots/polynomial_io.hpp"
#include "lensroots/report.hpp"
#include "lensroots/signed_index.hpp"
#include "lensroots/solver.hpp"
#include "lensroots/sturm.hpp"
#include "lensroots/symmetry.hpp"

namespace lensroots {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdmissible: return 3;
    case ErrorCode::UncertifiedCount:
    case ErrorCode::NonIsolatedZeroSet:
    case ErrorCode::CircleThroughZero: return 4;
    default: return 2;
  }
}

namespace {

struct Input {
  MixedPolynomial f;
  json source;
  std::optional<LensFamilySpec> family;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// JSON (polynomial, family output or report) or the canonical text form.
Input read_input(const std::string& path, std::istream& in) {
  const std::string text = read_all(path, in);
  Input input;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    input.f = parse_polynomial(text);
    input.source = text;
    return input;
  }
  input.source = j;
  if (j.is_object() && j.contains("family") && j["family"].is_object()) {
    input.family = family_spec_from_json(j["family"]);
    input.f = j.contains("polynomial") ? polynomial_from_json(j["polynomial"]) : elaborate(*input.family);
  } else if (j.is_object() && j.contains("kind") && !j.contains("terms")) {
    input.family = family_spec_from_json(j);
    input.f = elaborate(*input.family);
  } else {
    input.f = polynomial_from_json(j);
  }
  return input;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
  file << content;
}

Box box_from(const std::vector<double>& v) {
  if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3]))
    throw Error(ErrorCode::BadParameters, "--box needs x0 < x1 and y0 < y1");
  return {v[0], v[1], v[2], v[3]};
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  if (s.empty()) return {};
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded() || !j.is_array()) throw Error(ErrorCode::ParseError, "expected a JSON array, got " + s);
  json wrap{{"kind", "generalized"}, {"p", j}};
  return family_spec_from_json(wrap).p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Ray and Sturm cross-check for ell-type inputs; failures are recorded, not thrown.
json symmetry_summary(const LensFamilySpec& spec, const RootInventory& inv) {
  json s;
  const double eps = spec.kind == FamilyKind::Ell ? 0.0 : (spec.eps < 0.0 ? default_eps(spec.n, spec.m, spec.a) : spec.eps);
  try {
    const RayConfiguration rc = verify_ray_constraint(inv, spec.n);
    s["rays"] = "ok";
    s["orbits"] = rc.orbits.size();
  } catch (const Error& e) {
    s["rays"] = std::string(to_string(e.code()));
    s["ray_message"] = e.what();
  }
  try {
    const SymmetricCount sc = symmetric_count(spec.n, spec.m, spec.a, eps);
    s["sturm_total"] = sc.total;
    s["sturm_real_roots"] = {sc.real_roots_l, sc.real_roots_lprime};
    s["branch_multiplicity"] = {sc.multiplicity_l, sc.multiplicity_lprime};
  } catch (const Error& e) {
    s["sturm_error"] = e.what();
  }
  return s;
}

struct SolveOptions {
  std::string input, json_out, svg_out;
  std::vector<double> box;
  double tol = 1e-10;
  int max_depth = 60;
  bool count_multiplicity = false;
  unsigned threads = 0;
};

SolverConfig config_from(const SolveOptions& o) {
  SolverConfig cfg;
  cfg.tol = o.tol;
  cfg.max_depth = o.max_depth;
  cfg.count_multiplicity = o.count_multiplicity;
  cfg.threads = o.threads;
  return cfg;
}

void add_solver_flags(CLI::App* cmd, SolveOptions& o) {
  cmd->add_option("--box", o.box, "x0 x1 y0 y1")->expected(4);
  cmd->add_option("--tol", o.tol, "enclosure tolerance");
  cmd->add_option("--max-depth", o.max_depth, "subdivision depth limit");
  cmd->add_flag("--count-multiplicity", o.count_multiplicity, "count non-simple roots by |multiplicity|");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

RootInventory run_solver(const MixedPolynomial& f, const SolveOptions& o) {
  const SolverConfig cfg = config_from(o);
  return o.box.empty() ? solve(f, cfg) : isolate_roots(f, box_from(o.box), cfg);
}

json beta_json(const MixedPolynomial& f) {
  const TopFactorization tf = top_part_factor(f);
  json factors = json::array();
  for (const auto& lf : tf.factors)
    factors.push_back({{"gamma", {lf.gamma.real(), lf.gamma.imag()}}, {"multiplicity", lf.multiplicity}});
  json j{{"p", tf.p}, {"q", tf.q}, {"degree", tf.degree}, {"factors", factors}, {"admissible", is_admissible(tf)}};
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified root counts for mixed polynomials and lens equations", "lensroots"};
  app.require_subcommand(1);
  json report;
  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;

  // solve
  SolveOptions so;
  auto* solve_cmd = app.add_subcommand("solve", "isolate and count roots");
  solve_cmd->add_option("input", so.input, "polynomial JSON or text (default: stdin)");
  solve_cmd->add_option("--json", so.json_out, "also write the report here");
  solve_cmd->add_option("--svg", so.svg_out, "write a zero-curve plot");
  add_solver_flags(solve_cmd, so);

  // beta
  std::string beta_input;
  double beta_radius = 0.0;
  auto* beta_cmd = app.add_subcommand("beta", "signed root count from the top-degree part");
  beta_cmd->add_option("input", beta_input, "polynomial JSON or text (default: stdin)");
  beta_cmd->add_option("--radius", beta_radius, "also compute the winding number on |z| = radius");

  // family
  LensFamilySpec fs;
  std::string kind_name, p_list, q_list, r_list, sigma_list, alpha_list;
  std::optional<std::uint64_t> fam_seed;
  auto* family_cmd = app.add_subcommand("family", "emit a family member as polynomial JSON");
  family_cmd->add_option("kind", kind_name, "generalized|hs|ell|ell_eps|phi_t|rhie_preset|product|chebyshev|symmetric_power|point_masses")
      ->required();
  family_cmd->add_option("--n", fs.n);
  family_cmd->add_option("--m", fs.m);
  family_cmd->add_option("--a", fs.a);
  family_cmd->add_option("--eps", fs.eps, "negative selects the default");
  family_cmd->add_option("--t", fs.t);
  family_cmd->add_option("--b", fs.b);
  family_cmd->add_option("--preset", fs.preset);
  family_cmd->add_option("--p", p_list, "JSON array of coefficients, lowest degree first");
  family_cmd->add_option("--q", q_list);
  family_cmd->add_option("--r", r_list);
  family_cmd->add_option("--sigmas", sigma_list);
  family_cmd->add_option("--alphas", alpha_list);
  family_cmd->add_option("--seed", fam_seed, "random point masses (n of them) from this seed");

  // census
  LensFamilySpec cs;
  std::string census_kind, sweep_param, csv_out;
  std::vector<double> sweep;
  bool sweep_log = false;
  std::uint64_t census_seed = 1;
  int samples = 0;
  SolveOptions census_solve;
  auto* census_cmd = app.add_subcommand("census", "sweep one parameter and tabulate rho and beta as CSV");
  census_cmd->add_option("kind", census_kind)->required();
  census_cmd->add_option("--sweep", sweep_param, "parameter name: a, eps, t, b, n, m, preset");
  census_cmd->add_option("range", sweep, "lo hi steps")->expected(3);
  census_cmd->add_flag("--log", sweep_log, "logarithmic spacing");
  census_cmd->add_option("--n", cs.n);
  census_cmd->add_option("--m", cs.m);
  census_cmd->add_option("--a", cs.a);
  census_cmd->add_option("--eps", cs.eps);
  census_cmd->add_option("--t", cs.t);
  census_cmd->add_option("--b", cs.b);
  census_cmd->add_option("--preset", cs.preset);
  census_cmd->add_option("--seed", census_seed, "seed for random point masses");
  census_cmd->add_option("--samples", samples, "point_masses: number of random configurations");
  census_cmd->add_option("--csv", csv_out, "write the table here instead of stdout");
  add_solver_flags(census_cmd, census_solve);

  // radial
  int rn = 5, rm = 1;
  double ra = 0.7, reps = 0.0;
  std::string branch_name = "L";
  auto* radial_cmd = app.add_subcommand("radial", "radial equation of ell / ell_eps and its Sturm count");
  radial_cmd->add_option("--n", rn);
  radial_cmd->add_option("--m", rm);
  radial_cmd->add_option("--a", ra);
  radial_cmd->add_option("--eps", reps);
  radial_cmd->add_option("--branch", branch_name, "L or Lp");

  // milnor
  std::string milnor_input;
  int wp = 1, wq = 1;
  SolveOptions milnor_solve;
  auto* milnor_cmd = app.add_subcommand("milnor", "Milnor fibration invariants of the weighted homogenization");
  milnor_cmd->add_option("input", milnor_input);
  milnor_cmd->add_option("--p", wp);
  milnor_cmd->add_option("--q", wq);
  add_solver_flags(milnor_cmd, milnor_solve);

  // plot
  std::string plot_input, plot_out;
  PlotOptions plot_opt;
  SolveOptions plot_solve;
  auto* plot_cmd = app.add_subcommand("plot", "SVG of the zero curves of Re f and Im f");
  plot_cmd->add_option("input", plot_input);
  plot_cmd->add_option("--svg", plot_out, "output file (default: stdout)");
  plot_cmd->add_option("--grid", plot_opt.grid);
  add_solver_flags(plot_cmd, plot_solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report = {{"error", {{"code", "ParseError"}, {"message", e.what()}}}};
    out << report.dump(2) << '\n';
    err << e.what() << '\n';
    return 2;
  }

  std::string csv;
  std::string svg_stdout;
  try {
    if (*solve_cmd) {
      report["command"] = "solve";
      const Input input = read_input(so.input, in);
      report["polynomial"] = to_json(input.f);
      report["text"] = input.f.to_string();
      if (input.family) report["family"] = to_json(*input.family);
      try {
        report["beta"] = beta(input.f);
      } catch (const Error&) {
        report["beta"] = nullptr;
      }
      const RootInventory inv = run_solver(input.f, so);
      report["inventory"] = to_json(inv);
      report["rho"] = inv.rho;
      report["signed_sum"] = inv.signed_sum;
      report["certified"] = inv.certified;
      if (input.family && (input.family->kind == FamilyKind::Ell || input.family->kind == FamilyKind::EllEps))
        report["symmetry"] = symmetry_summary(*input.family, inv);
      if (!so.svg_out.empty()) write_file(so.svg_out, render_svg(input.f, inv.domain, &inv));
      if (!inv.certified) {
        report["error"] = {{"code", "UncertifiedCount"},
                           {"message", std::to_string(inv.unresolved_boxes.size()) + " unresolved boxes"}};
        status = 4;
      }
    } else if (*beta_cmd) {
      report["command"] = "beta";
      const Input input = read_input(beta_input, in);
      report["polynomial"] = to_json(input.f);
      report["factorization"] = beta_json(input.f);
      report["beta"] = beta(input.f);
      if (beta_radius > 0.0) report["winding_beta"] = winding_beta(input.f, beta_radius);
    } else if (*family_cmd) {
      report["command"] = "family";
      fs.kind = family_kind_from_string(kind_name);
      fs.p = parse_complex_list(p_list);
      fs.q = parse_complex_list(q_list);
      fs.r = parse_complex_list(r_list);
      fs.sigmas = parse_complex_list(sigma_list);
      fs.alphas = parse_complex_list(alpha_list);
      if (fs.kind == FamilyKind::PointMasses && fam_seed) {
        std::mt19937_64 rng(*fam_seed);
        const PointMassConfig pm = random_point_masses(fs.n, rng);
        fs.sigmas = pm.sigmas;
        fs.alphas = pm.alphas;
      }
      if (fs.kind == FamilyKind::EllEps && fs.eps < 0.0) fs.eps = default_eps(fs.n, fs.m, fs.a);
      const MixedPolynomial f = elaborate(fs);
      report["family"] = to_json(fs);
      report["polynomial"] = to_json(f);
      report["text"] = f.to_string();
      const DegreeInfo d = f.degrees();
      report["degrees"] = {{"deg_z", d.deg_z}, {"deg_zbar", d.deg_zbar}, {"deg", d.deg},
                           {"in_m", d.in_m},   {"in_l", d.in_l},         {"in_lhs", d.in_lhs}};
    } else if (*census_cmd) {
      report["command"] = "census";
      cs.kind = family_kind_from_string(census_kind);
      std::ostringstream table;
      table << "param,rho,beta,certified,seconds\n";
      std::vector<double> values;
      const bool random_masses = cs.kind == FamilyKind::PointMasses;
      if (random_masses) {
        if (samples < 1) throw Error(ErrorCode::BadParameters, "point_masses census needs --samples");
        for (int i = 0; i < samples; ++i) values.push_back(i);
      } else {
        if (sweep.size() != 3 || sweep_param.empty())
          throw Error(ErrorCode::BadParameters, "census needs --sweep <param> lo hi steps");
        const int steps = static_cast<int>(sweep[2]);
        if (steps < 1) throw Error(ErrorCode::BadParameters, "steps must be >= 1");
        if (sweep_log && !(sweep[0] > 0.0 && sweep[1] > 0.0))
          throw Error(ErrorCode::BadParameters, "--log needs a positive range");
        for (int i = 0; i < steps; ++i) {
          const double u = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
          values.push_back(sweep_log ? sweep[0] * std::pow(sweep[1] / sweep[0], u) : sweep[0] + u * (sweep[1] - sweep[0]));
        }
      }
      std::mt19937_64 rng(census_seed);
      json rows = json::array();
      int uncertified = 0;
      for (double v : values) {
        LensFamilySpec s = cs;
        if (random_masses) {
          const PointMassConfig pm = random_point_masses(cs.n, rng);
          s.sigmas = pm.sigmas;
          s.alphas = pm.alphas;
        } else if (sweep_param == "a") {
          s.a = v;
        } else if (sweep_param == "eps") {
          s.eps = v;
        } else if (sweep_param == "t") {
          s.t = v;
        } else if (sweep_param == "b") {
          s.b = v;
        } else if (sweep_param == "n") {
          s.n = static_cast<int>(std::lround(v));
        } else if (sweep_param == "m") {
          s.m = static_cast<int>(std::lround(v));
        } else if (sweep_param == "preset") {
          s.preset = static_cast<int>(std::lround(v));
        } else {
          throw Error(ErrorCode::BadParameters, "cannot sweep '" + sweep_param + "'");
        }
        const auto start = std::chrono::steady_clock::now();
        const MixedPolynomial f = elaborate(s);
        std::string beta_cell = "NA";
        try {
          beta_cell = std::to_string(beta(f));
        } catch (const Error&) {
        }
        int rho_value = -1;
        bool certified = false;
        try {
          const RootInventory inv = run_solver(f, census_solve);
          rho_value = inv.rho;
          certified = inv.certified;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonIsolatedZeroSet && e.code() != ErrorCode::NotAdmissible) throw;
        }
        if (!certified) ++uncertified;
        const double secs = seconds_since(start);
        char secs_buf[32];
        std::snprintf(secs_buf, sizeof secs_buf, "%.4f", secs);
        char param_buf[32];
        std::snprintf(param_buf, sizeof param_buf, "%.10g", v);
        table << param_buf << ',' << rho_value << ',' << beta_cell << ',' << (certified ? "true" : "false") << ','
              << secs_buf << '\n';
        rows.push_back({{"param", v}, {"rho", rho_value}, {"beta", beta_cell}, {"certified", certified}});
      }
      csv = table.str();
      if (!csv_out.empty()) {
        write_file(csv_out, csv);
        csv.clear();
      }
      report["rows"] = rows;
      report["uncertified_rows"] = uncertified;
      if (uncertified > 0) status = 4;
    } else if (*radial_cmd) {
      report["command"] = "radial";
      Branch branch;
      if (branch_name == "L") {
        branch = Branch::L;
      } else if (branch_name == "Lp" || branch_name == "L'") {
        branch = Branch::LPrime;
      } else {
        throw Error(ErrorCode::BadParameters, "--branch must be L or Lp");
      }
      const RadialEquation eq = radial_equation(rn, rm, ra, reps, branch);
      const auto p = RationalPolynomial::from_doubles(eq.coeffs);
      int count = sturm_count(p);
      const bool zero_root = sgn(p.evaluate(0)) == 0;
      report["branch"] = std::string(to_string(branch));
      report["coefficients"] = eq.coeffs;
      report["validity"] = eq.validity;
      report["real_roots"] = count;
      report["nonzero_real_roots"] = count - (zero_root ? 1 : 0);
      report["branch_multiplicity"] = branch_multiplicity(rn, branch);
      report["symmetric_total"] = symmetric_count(rn, rm, ra, reps).total;
    } else if (*milnor_cmd) {
      report["command"] = "milnor";
      const Input input = read_input(milnor_input, in);
      const Weight w{wp, wq};
      report["polynomial"] = to_json(input.f);
      report["homogenized"] = to_json(homogenize(input.f, w));
      const RootInventory inv = run_solver(input.f, milnor_solve);
      if (!inv.certified) throw Error(ErrorCode::UncertifiedCount, "root count is not certified");
      const MilnorReport mr = invariants_from_rho(input.f, w, inv.rho);
      report["milnor"] = to_json(mr);
      report["rho"] = inv.rho;
    } else if (*plot_cmd) {
      report["command"] = "plot";
      const Input input = read_input(plot_input, in);
      const RootInventory inv = run_solver(input.f, plot_solve);
      const std::string svg = render_svg(input.f, inv.domain, &inv, plot_opt);
      if (plot_out.empty()) {
        svg_stdout = svg;
      } else {
        write_file(plot_out, svg);
        report["svg"] = plot_out;
      }
      report["rho"] = inv.rho;
      report["certified"] = inv.certified;
    }
  } catch (const Error& e) {
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    err << e.what() << '\n';
    status = exit_code_for(e.code());
  } catch (const std::exception& e) {
    report["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    err << e.what() << '\n';
    status = 2;
  }
  report["seconds"] = seconds_since(t0);
  report["exit_code"] = status;

  if (!svg_stdout.empty() && status == 0) {
    out << svg_stdout;
  } else if (!csv.empty()) {
    out << csv;
  } else {
    out << report.dump(2) << '\n';
  }
  if (*solve_cmd && !so.json_out.empty()) write_file(so.json_out, report.dump(2) + "\n");
  if (*census_cmd && !csv_out.empty()) err << report.dump(2) << '\n';
  return status;
}

}  // namespace lensroots
