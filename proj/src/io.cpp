#include "c14/io.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>

namespace c14 {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Input, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::Input, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void put_num_den(json& j, const Rational& x) {
  j["num"] = num_str(x);
  j["den"] = den_str(x);
}

Rational num_den(const json& j) {
  auto str = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(ErrorKind::Input, "num/den must be strings or integers");
  };
  return parse_rational(str(field(j, "num")), j.contains("den") ? str(j.at("den")) : "1");
}

}  // namespace

json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_object()) return num_den(j);
  fail(ErrorKind::Input, "expected a rational, got " + j.dump());
}

json symtensor_to_json(const SymTensor& t) {
  json j;
  j["rank"] = t.rank();
  j["mode"] = t.mode() == ScalarMode::Rational ? "rational" : "float";
  json comps = json::array();
  if (t.mode() == ScalarMode::Rational) {
    for (const auto& [idx, v] : t.components()) {
      json c;
      c["idx"] = idx;
      put_num_den(c, v);
      comps.push_back(c);
    }
  } else {
    for (const auto& [idx, v] : t.float_components()) {
      json c;
      c["idx"] = idx;
      c["value"] = v;
      comps.push_back(c);
    }
  }
  j["components"] = comps;
  return j;
}

SymTensor symtensor_from_json(const json& j) {
  int rank = int_field(j, "rank");
  std::string mode = j.value("mode", "rational");
  if (mode != "rational" && mode != "float") fail(ErrorKind::Input, "unknown tensor mode " + mode);
  SymTensor t(rank, mode == "rational" ? ScalarMode::Rational : ScalarMode::Float);
  for (const auto& c : field(j, "components")) {
    auto idx = field(c, "idx").get<std::vector<int>>();
    if (mode == "rational")
      t.set(idx, num_den(c));
    else
      t.set_float(idx, field(c, "value").get<double>());
  }
  return t;
}

json scalar_to_json(const LambdaScalar& s) {
  json mons = json::array();
  for (const auto& [m, c] : s.monomials()) {
    json e;
    e["lam_exp"] = m.lam_exp;
    if (m.psi)
      e["psi"] = {{"n", m.psi->n}, {"k", m.psi->k}};
    else
      e["psi"] = nullptr;
    put_num_den(e, c);
    mons.push_back(e);
  }
  return {{"monomials", mons}};
}

LambdaScalar scalar_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return LambdaScalar(rational_from_json(j));
  LambdaScalar s;
  for (const auto& e : field(j, "monomials")) {
    LamMono m;
    m.lam_exp = e.value("lam_exp", 0);
    if (e.contains("psi") && !e.at("psi").is_null())
      m.psi = PsiSymbol{int_field(e.at("psi"), "n"), e.at("psi").value("k", 0)};
    s.add_monomial(m, num_den(e));
  }
  return s;
}

json series_to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t;
    std::vector<int> ex(kNumVars);
    for (int v = 0; v < kNumVars; ++v) ex[v] = mono_exp(m, v);
    t["p"] = mono_p(m);
    t["q"] = mono_q(m);
    t["r"] = mono_r(m);
    t["s"] = mono_s(m);
    t["exponents"] = ex;
    t["coeff"] = scalar_to_json(c);
    terms.push_back(t);
  }
  json j;
  j["max_order"] = s.max_order();
  j["variables"] = {"mu_1", "mu_2", "mu_3", "mu_11", "mu_12", "mu_13", "mu_22", "mu_23",
                    "mu_33", "lambda_1", "lambda_2", "lambda_3"};
  j["terms"] = terms;
  return j;
}

Series series_from_json(const json& j) {
  Series s(int_field(j, "max_order"));
  for (const auto& t : field(j, "terms")) {
    auto ex = field(t, "exponents").get<std::vector<int>>();
    if ((int)ex.size() != kNumVars) fail(ErrorKind::Input, "series term needs 12 exponents");
    std::array<int, kNumVars> a{};
    for (int v = 0; v < kNumVars; ++v) {
      if (ex[v] < 0) fail(ErrorKind::Input, "negative exponent in series term");
      a[v] = ex[v];
    }
    int sp = t.value("s", 0);
    if (sp < 0) fail(ErrorKind::Input, "negative mu power in series term");
    s.add_term(make_mono(a, sp), scalar_from_json(field(t, "coeff")));
  }
  return s;
}

json theta_table_to_json(const ThetaTable& t) {
  json entries = json::array();
  for (const auto& [k, v] : t.entries) {
    if (v.is_zero()) continue;
    entries.push_back({{"p", k.p}, {"q", k.q}, {"r", k.r}, {"s", k.s}, {"value", scalar_to_json(v)}});
  }
  json j;
  j["max_order"] = t.max_order;
  j["entries"] = entries;
  return j;
}

ThetaTable theta_table_from_json(const json& j) {
  ThetaTable t;
  t.max_order = int_field(j, "max_order");
  if (t.max_order < 0) fail(ErrorKind::Input, "negative table order");
  for (const auto& e : field(j, "entries")) {
    ThetaKey k{int_field(e, "p"), int_field(e, "q"), int_field(e, "r"), int_field(e, "s")};
    if (k.p < 0 || k.q < 0 || k.r < 0 || k.s < 0) fail(ErrorKind::Input, "negative theta index");
    t.set(k, scalar_from_json(field(e, "value")));
  }
  return t;
}

json table_report_to_json(const TableReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"relation", x.relation}, {"key", x.key.str()}, {"residual", scalar_to_json(x.residual)}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json polyf_to_json(const PolyF& f) {
  json a = json::array();
  for (const auto& [e, c] : f.coeffs)
    a.push_back({{"G0", e[0]}, {"G1", e[1]}, {"G2", e[2]}, {"coeff", rational_json(c)}});
  return a;
}

PolyF polyf_from_json(const json& j) {
  if (j.is_string()) return PolyF::named(j.get<std::string>());
  if (!j.is_array()) fail(ErrorKind::Input, "F must be a name or a list of monomials");
  PolyF f;
  for (const auto& m : j) {
    PolyF t = PolyF::monomial(m.value("G0", 0), m.value("G1", 0), m.value("G2", 0),
                              rational_from_json(field(m, "coeff")));
    for (const auto& [e, c] : t.coeffs) f.coeffs[e] += c;
  }
  std::erase_if(f.coeffs, [](const auto& kv) { return kv.second == 0; });
  return f;
}

SolutionParams params_from_json(const json& j, bool* has_theta) {
  if (!j.is_object()) fail(ErrorKind::Input, "parameter file must hold a JSON object");
  static const std::vector<std::string> known{"beta", "psi_const", "F", "ttH0", "theta",
                                              "beta0_injection"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      fail(ErrorKind::Input, "unknown parameter '" + k + "'");
  SolutionParams p;
  auto int_key = [](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(ErrorKind::Input, "bad index '" + s + "'");
    return v;
  };
  if (j.contains("beta"))
    for (const auto& [k, v] : j.at("beta").items()) p.beta[int_key(k)] = rational_from_json(v);
  if (j.contains("psi_const"))
    for (const auto& [k, v] : j.at("psi_const").items()) p.psi_const[int_key(k)] = rational_from_json(v);
  if (j.contains("F")) p.F = polyf_from_json(j.at("F"));
  if (j.contains("ttH0")) p.ttH0 = series_from_json(j.at("ttH0"));
  if (j.contains("theta")) p.theta = theta_table_from_json(j.at("theta"));
  if (has_theta) *has_theta = j.contains("theta");
  if (j.contains("beta0_injection")) p.beta0_injection = rational_from_json(j.at("beta0_injection"));
  for (const auto& [r, b] : p.beta)
    if (r < 1) fail(ErrorKind::Input, "beta indices start at 1; use beta0_injection for r = 0");
  for (const auto& [r, c] : p.psi_const)
    if (r < 0 || r % 2) fail(ErrorKind::Input, "psi_const indices must be even and >= 0");
  return p;
}

json params_to_json(const SolutionParams& p) {
  json j;
  json b = json::object(), c = json::object();
  for (const auto& [r, v] : p.beta) b[std::to_string(r)] = rational_json(v);
  for (const auto& [r, v] : p.psi_const) c[std::to_string(r)] = rational_json(v);
  j["beta"] = b;
  j["psi_const"] = c;
  j["F"] = polyf_to_json(p.F);
  if (!p.ttH0.is_zero()) j["ttH0"] = series_to_json(p.ttH0);
  j["theta"] = theta_table_to_json(p.theta);
  if (p.beta0_injection) j["beta0_injection"] = rational_json(*p.beta0_injection);
  return j;
}

json multipliers_to_json(const Multipliers& m) {
  auto arr = [](const auto& a) {
    json o = json::array();
    for (const auto& x : a) o.push_back(rational_json(x));
    return o;
  };
  json j;
  j["mu"] = rational_json(m.mu);
  j["mu_vec"] = arr(m.mu_vec);
  j["mu_mat"] = arr(m.mu_mat);
  j["lambda"] = rational_json(m.lambda);
  j["lam_vec"] = arr(m.lam_vec);
  return j;
}

Multipliers multipliers_from_json(const json& j) {
  Multipliers m;
  auto fill = [&](const char* key, auto& a) {
    if (!j.contains(key)) return;
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != a.size()) fail(ErrorKind::Input, std::string("bad length for ") + key);
    for (size_t i = 0; i < a.size(); ++i) a[i] = rational_from_json(v[i]);
  };
  if (j.contains("mu")) m.mu = rational_from_json(j.at("mu"));
  if (j.contains("lambda")) m.lambda = rational_from_json(j.at("lambda"));
  fill("mu_vec", m.mu_vec);
  fill("mu_mat", m.mu_mat);
  fill("lam_vec", m.lam_vec);
  return m;
}

json verify_report_to_json(const VerifyReport& r) {
  json a = json::array();
  for (const auto& c : r.conditions) {
    json e;
    e["condition"] = c.condition;
    e["order"] = c.order;
    e["max_residual"] = std::isfinite(c.max_residual) ? json(c.max_residual) : json("inf");
    e["worst_point"] = multipliers_to_json(c.worst_point);
    e["symbolic_zero"] = c.symbolic_zero;
    if (c.rational_zero) e["rational_zero"] = *c.rational_zero;
    e["pass"] = c.pass;
    a.push_back(e);
  }
  return a;
}

json xmatrix_to_json(const XMatrix& x) {
  json rows = json::array();
  for (int r = 0; r < 14; ++r) {
    json row = json::array();
    for (int c = 0; c < 14; ++c) row.push_back(to_string(x(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json dense_to_json(const DenseTensor& t) {
  return {{"rank", t.rank}, {"mode", "float"}, {"values", t.v}};
}

json dense_to_json(const DenseTensorQ& t) {
  json v = json::array();
  for (const auto& x : t.v) v.push_back(to_string(x));
  return {{"rank", t.rank}, {"mode", "rational"}, {"values", v}};
}

json beta0_report_to_json(const Beta0Report& r) {
  json j;
  j["solvable"] = r.solvable;
  j["unknowns"] = r.unknowns;
  j["equations"] = r.equations;
  j["rank"] = r.rank;
  j["f1_f2_vanish"] = r.f1_f2_vanish;
  j["f7_relation"] = r.f7_relation;
  j["candidate_zero"] = r.candidate_zero;
  j["family"] = r.family;
  return j;
}

json integration_report_to_json(const IntegrationConstantReport& r) {
  json j;
  j["constant"] = r.constant;
  j["rho_derivative"] = r.rho_derivative;
  j["rho_threshold"] = r.rho_threshold;
  j["tf_derivative"] = r.tf_derivative;
  j["tf_threshold"] = r.tf_threshold;
  j["tf_spread"] = r.tf_spread;
  j["rho_independent"] = r.rho_independent;
  j["tf_constant"] = r.tf_constant;
  j["constant_zero"] = r.constant_zero;
  j["verdict"] = r.verdict;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Input, path + ": " + e.what());
  }
}

}  // namespace c14
