#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "c14/closure.hpp"
#include "c14/galilean.hpp"
#include "c14/io.hpp"
#include "c14/recurrence.hpp"
#include "c14/solutions.hpp"

namespace c14 {

namespace {

struct RunConfig {
  int order = 4;
  std::string params, seed_table, thermo, out = ".", mode = "float", velocity = "0,0,0";
  double tol = 1e-9;
  int points = 100;
  std::uint64_t rng_seed = 1;
};

// Sample point shared by generate and profile.
Multipliers reference_point() {
  Multipliers m;
  m.lambda = 2;
  m.lam_vec = {1, 0, 0};
  m.mat(0, 0) = 1;
  return m;
}

void check_config(const RunConfig& c) {
  if (c.order < 0) fail(ErrorKind::Input, "--order must be >= 0");
  if (!(c.tol > 0)) fail(ErrorKind::Input, "--tol must be positive");
  if (c.points < 1) fail(ErrorKind::Input, "--points must be >= 1");
  if (c.mode != "rational" && c.mode != "float") fail(ErrorKind::Input, "--mode is rational or float");
}

struct LoadedParams {
  SolutionParams params;
  std::vector<TableViolation> conflicts;
};

// Parameters from --params (defaults when absent) with the theta table taken from
// the file, else closed from --seed-table, else the closure of no seeds.
LoadedParams load_params(const RunConfig& c, const SolutionParams* fallback) {
  LoadedParams lp;
  bool has_theta = false;
  if (!c.params.empty())
    lp.params = params_from_json(read_json_file(c.params), &has_theta);
  else if (fallback)
    lp.params = *fallback;
  else
    fail(ErrorKind::Input, "--params is required");
  if (!has_theta) {
    ThetaTable seeds;
    if (!c.seed_table.empty()) seeds = theta_table_from_json(read_json_file(c.seed_table));
    auto closed = close_table(seeds, c.order + 2);
    lp.params.theta = closed.table;
    lp.conflicts = closed.conflicts;
  }
  return lp;
}

SolutionParams default_params() {
  SolutionParams p;
  p.beta[1] = 1;
  p.beta[2] = Rational(1, 3);
  p.psi_const[0] = 2;
  p.psi_const[2] = Rational(-1, 5);
  p.F = PolyF::named("G1");
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Input, "cannot write " + path.string());
  f << text;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

Velocity parse_velocity(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, ',')) parts.push_back(p);
  if (parts.size() != 3) fail(ErrorKind::Input, "--velocity needs three comma-separated components");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

// ---- generate ----

int run_generate(const RunConfig& c, std::ostream& out) {
  auto lp = load_params(c, nullptr);
  if (!lp.conflicts.empty())
    fail(ErrorKind::Input, "theta seeds are inconsistent: " + lp.conflicts.front().relation +
                               " at " + lp.conflicts.front().key.str());
  lp.params.validate();
  const auto& params = lp.params;
  int N = c.order;
  Series H = build_H1(N) + build_DeltaH(params, N);
  Multipliers at = reference_point();
  bool exact = c.mode == "rational";

  json grades = json::array();
  json doc;
  doc["order"] = N;
  doc["mode"] = c.mode;
  doc["family"] = exact ? "poly" : "exp";
  doc["point"] = multipliers_to_json(at);
  doc["index_order"] = "lexicographic over (k,i,j), zero-based flat index 9k+3i+j";
  if (exact) {
    PolyFamily real;
    auto ct = flux_tensors_exact(H, N, at, real);
    auto df = delta_flux_exact(params, N, at);
    for (int n = 0; n <= N; ++n)
      grades.push_back({{"order", n},
                        {"F", dense_to_json(ct.F[n])},
                        {"G", dense_to_json(ct.G[n])},
                        {"antisym_F", dense_to_json(antisym_first_pair(ct.F[n]))},
                        {"antisym_G", dense_to_json(antisym_first_pair(ct.G[n]))},
                        {"delta_flux_antisym_F", dense_to_json(antisym_first_pair(df.F[n]))},
                        {"delta_flux_antisym_G", dense_to_json(antisym_first_pair(df.G[n]))}});
    doc["h_prime"] = to_string(ct.h_prime);
    doc["h_prime_k"] = dense_to_json(ct.h_prime_k);
    doc["relation_residual"] = to_string(ct.relation_residual);
  } else {
    ExpFamily real;
    auto ct = flux_tensors(H, N, at, real);
    auto df = delta_flux(params, N, at);
    for (int n = 0; n <= N; ++n)
      grades.push_back({{"order", n},
                        {"F", dense_to_json(ct.F[n])},
                        {"G", dense_to_json(ct.G[n])},
                        {"antisym_F", dense_to_json(antisym_first_pair(ct.F[n]))},
                        {"antisym_G", dense_to_json(antisym_first_pair(ct.G[n]))},
                        {"delta_flux_antisym_F", dense_to_json(antisym_first_pair(df.F[n]))},
                        {"delta_flux_antisym_G", dense_to_json(antisym_first_pair(df.G[n]))}});
    doc["h_prime"] = ct.h_prime;
    doc["h_prime_k"] = dense_to_json(ct.h_prime_k);
    doc["relation_residual"] = ct.relation_residual;
  }
  doc["grades"] = grades;

  std::filesystem::path dir(c.out);
  write_file(dir / "closure_tensors.json", doc.dump(2) + "\n");
  write_file(dir / "theta_table.json", theta_table_to_json(params.theta).dump(2) + "\n");
  out << "wrote " << (dir / "closure_tensors.json").string() << "\n";
  out << "wrote " << (dir / "theta_table.json").string() << "\n";
  return 0;
}

// ---- verify ----

struct Check {
  std::string name;
  bool pass;
  double residual;
  json detail;
};

void add_report(std::vector<Check>& checks, const std::string& prefix, const VerifyReport& r) {
  json d = verify_report_to_json(r);
  for (size_t i = 0; i < r.conditions.size(); ++i) {
    const auto& c = r.conditions[i];
    checks.push_back({prefix + ":" + c.condition, c.pass, c.max_residual, d[i]});
  }
}

int run_verify(const RunConfig& c, std::ostream& out) {
  SolutionParams fallback = default_params();
  auto lp = load_params(c, &fallback);
  const auto& params = lp.params;
  int N = c.order;
  VerifyOptions opts;
  opts.order = N;
  opts.points = c.points;
  opts.tol = c.tol;
  opts.rng_seed = c.rng_seed;
  if (c.mode == "rational") {
    opts.family = "poly";
    opts.rational_points = 2;
  }

  std::vector<Check> checks;
  {
    auto rep = verify_table(params.theta, params.theta.max_order);
    bool ok = rep.ok() && lp.conflicts.empty();
    json d = table_report_to_json(rep);
    json conf = json::array();
    for (const auto& v : lp.conflicts)
      conf.push_back({{"relation", v.relation}, {"key", v.key.str()}, {"residual", v.residual.str()}});
    d["seed_conflicts"] = conf;
    checks.push_back({"theta_table", ok, ok ? 0.0 : 1.0, d});
  }
  for (const auto& [r, b] : params.psi_const)
    if (r < 0 || r % 2) fail(ErrorKind::Input, "psi_const indices must be even");

  Series H1 = build_H1(N);
  add_report(checks, "h1_core", verify_potential(H1, ConditionSet::Core, opts));
  add_report(checks, "h1_galilean", verify_potential(H1, ConditionSet::Galilean, opts));

  Series Hs = build_Hstar0(params, N);
  TensorSeries tt = build_ttHk(params, N);
  add_report(checks, "hstar0", verify_potential(Hs, ConditionSet::HStar0, opts, &params.theta));
  add_report(checks, "vector", verify_potential(Hs, ConditionSet::Vector, opts, &params.theta, &tt));

  {
    Beta0Ansatz a;
    a.beta0 = params.beta0_injection.value_or(Rational(0));
    auto rep = check_beta0(a);
    bool ok = rep.solvable && rep.f1_f2_vanish && rep.f7_relation;
    checks.push_back({"beta0_vanishes", ok, ok ? 0.0 : 1.0, beta0_report_to_json(rep)});
  }

  Series DH = build_DeltaH(params, N);
  add_report(checks, "deltaH_core", verify_potential(DH, ConditionSet::Core, opts));
  add_report(checks, "deltaH_galilean", verify_potential(DH, ConditionSet::Galilean, opts));
  add_report(checks, "total_galilean", verify_potential(H1 + DH, ConditionSet::Galilean, opts));

  {
    bool ok = true;
    json d = json::array();
    for (int n = 1; n <= N; ++n) {
      auto md = DH.grade(n).mu_degree();
      bool g = !md.transcendental && (!md.degree || *md.degree <= n - 1);
      d.push_back({{"order", n},
                    {"transcendental", md.transcendental},
                    {"degree", md.degree ? json(*md.degree) : json(nullptr)}});
      ok = ok && g;
    }
    checks.push_back({"mu_degree_bound", ok, ok ? 0.0 : 1.0, d});
  }
  {
    auto fs = flux_series(H1 + DH, N);
    bool ok = true;
    for (int n = 0; n <= std::min(N, 2); ++n)
      ok = ok && antisym_first_pair(fs.F.grade(n)).is_zero() &&
           antisym_first_pair(fs.G.grade(n)).is_zero();
    checks.push_back({"fluxes_symmetric_through_second_order", ok, ok ? 0.0 : 1.0, json::object()});
  }

  bool all = true;
  json arr = json::array();
  for (const auto& ch : checks) {
    all = all && ch.pass;
    arr.push_back({{"name", ch.name}, {"pass", ch.pass}, {"max_residual", ch.residual}, {"detail", ch.detail}});
    out << (ch.pass ? "PASS " : "FAIL ") << ch.name << " " << fmt(ch.residual) << "\n";
  }
  json doc;
  doc["order"] = N;
  doc["tol"] = c.tol;
  doc["points"] = c.points;
  doc["rng_seed"] = c.rng_seed;
  doc["mode"] = c.mode;
  doc["params"] = params_to_json(params);
  doc["checks"] = arr;
  doc["pass"] = all;
  std::filesystem::path path = std::filesystem::path(c.out) / "verify_report.json";
  write_file(path, doc.dump(2) + "\n");
  out << "verify: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}

// ---- profile ----

int run_profile(const RunConfig& c, std::ostream& out) {
  auto lp = load_params(c, nullptr);
  if (!lp.conflicts.empty())
    fail(ErrorKind::Input, "theta seeds are inconsistent: " + lp.conflicts.front().relation +
                               " at " + lp.conflicts.front().key.str());
  lp.params.validate();
  int N = c.order;
  Series H = build_H1(N) + build_DeltaH(lp.params, N);
  Multipliers at = reference_point();
  std::ostringstream csv;
  csv << "order,antisym_F,antisym_G\n";
  if (c.mode == "rational") {
    PolyFamily real;
    auto ct = flux_tensors_exact(H, N, at, real);
    for (const auto& row : antisym_profile(ct.F, ct.G, N))
      csv << row.order << "," << to_string(row.F) << "," << to_string(row.G) << "\n";
  } else {
    ExpFamily real;
    auto ct = flux_tensors(H, N, at, real);
    csv << std::setprecision(17);
    for (const auto& row : antisym_profile(ct.F, ct.G, N))
      csv << row.order << "," << row.F << "," << row.G << "\n";
  }
  out << csv.str();
  write_file(std::filesystem::path(c.out) / "profile.csv", csv.str());
  return 0;
}

// ---- xmat ----

int run_xmat(const RunConfig& c, std::ostream& out) {
  Velocity v = parse_velocity(c.velocity);
  json doc;
  doc["velocity"] = {to_string(v[0]), to_string(v[1]), to_string(v[2])};
  doc["components"] = {"F", "F_1", "F_2", "F_3", "F_11", "F_12", "F_13",
                       "F_22", "F_23", "F_33", "G", "G_1", "G_2", "G_3"};
  doc["X"] = xmatrix_to_json(build_X(v));
  std::string text = doc.dump(2) + "\n";
  out << text;
  write_file(std::filesystem::path(c.out) / "xmatrix.json", text);
  return 0;
}

// ---- appendix2 ----

int run_appendix2(const RunConfig& c, std::ostream& out) {
  if (c.thermo.empty()) fail(ErrorKind::Input, "--thermo is required");
  std::ifstream in(c.thermo);
  if (!in) fail(ErrorKind::Input, "cannot open " + c.thermo);
  ThermoTable t = read_thermo_csv(in);
  auto rep = verify_integration_constant(t, c.tol);
  json doc = integration_report_to_json(rep);
  write_file(std::filesystem::path(c.out) / "appendix2_report.json", doc.dump(2) + "\n");
  out << "constant " << fmt(rep.constant) << "\n";
  out << (rep.rho_independent ? "PASS" : "FAIL") << " rho_independence " << fmt(rep.rho_derivative) << "\n";
  out << (rep.tf_constant ? "PASS" : "FAIL") << " tf_constancy " << fmt(rep.tf_derivative) << "\n";
  out << rep.verdict << "\n";
  return rep.consistent() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entropy-principle closure engine for the 14-moment dense-gas model", "c14"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--order", cfg.order, "deviation order");
    s->add_option("--out", cfg.out, "output directory");
    s->add_option("--mode", cfg.mode, "rational|float");
    s->add_option("--tol", cfg.tol, "tolerance");
  };
  auto* gen = app.add_subcommand("generate", "closure tensors and theta table");
  common(gen);
  gen->add_option("--params", cfg.params, "parameter JSON");
  gen->add_option("--seed-table", cfg.seed_table, "theta seed JSON");
  gen->add_option("--rng-seed", cfg.rng_seed, "accepted for uniformity; output does not depend on it");

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  common(ver);
  ver->add_option("--params", cfg.params, "parameter JSON");
  ver->add_option("--seed-table", cfg.seed_table, "theta seed JSON");
  ver->add_option("--points", cfg.points, "random points per condition");
  ver->add_option("--rng-seed", cfg.rng_seed, "sampling seed");

  auto* pro = app.add_subcommand("profile", "antisymmetry per order");
  common(pro);
  pro->add_option("--params", cfg.params, "parameter JSON");
  pro->add_option("--seed-table", cfg.seed_table, "theta seed JSON");

  auto* xm = app.add_subcommand("xmat", "Galilean X matrix");
  xm->add_option("--velocity", cfg.velocity, "v1,v2,v3 as rationals");
  xm->add_option("--out", cfg.out, "output directory");

  auto* ap = app.add_subcommand("appendix2", "integration-constant check");
  ap->add_option("--thermo", cfg.thermo, "thermodynamic CSV table");
  ap->add_option("--tol", cfg.tol, "tolerance");
  ap->add_option("--out", cfg.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    check_config(cfg);
    if (*gen) return run_generate(cfg, out);
    if (*ver) return run_verify(cfg, out);
    if (*pro) return run_profile(cfg, out);
    if (*xm) return run_xmat(cfg, out);
    if (*ap) return run_appendix2(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace c14
