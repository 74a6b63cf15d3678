#include "c14/closure.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace c14 {

namespace {

TensorSeries D(const Series& s, Var v) { return differentiate(s, v); }
TensorSeries D(const TensorSeries& s, Var v) { return differentiate(s, v); }

Series powr(const Series& x, int n) {
  Series r = Series::constant(LambdaScalar(1), x.max_order());
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

template <class T>
T absval(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return std::fabs(x);
  else
    return abs(x);
}

template <class T>
Dense<T> antisym(const Dense<T>& t) {
  if (t.rank < 2) fail(ErrorKind::InvalidRank, "antisymmetrization needs rank >= 2");
  Dense<T> out(t.rank);
  size_t inner = Dense<T>::pow3(t.rank - 2);
  for (size_t k = 0; k < 3; ++k)
    for (size_t i = 0; i < 3; ++i)
      for (size_t r = 0; r < inner; ++r) {
        size_t a = (k * 3 + i) * inner + r, b = (i * 3 + k) * inner + r;
        out.v[a] = (t.v[a] - t.v[b]) / 2;
      }
  return out;
}

template <class T>
T max_norm(const Dense<T>& t) {
  T m = 0;
  for (const auto& x : t.v) m = std::max<T>(m, absval(x));
  return m;
}

template <class T>
std::vector<AntisymRow<T>> profile(const std::vector<Dense<T>>& F, const std::vector<Dense<T>>& G,
                                   int max_order) {
  std::vector<AntisymRow<T>> rows;
  for (int n = 0; n <= max_order; ++n) {
    AntisymRow<T> row{n, T(0), T(0)};
    if (n < (int)F.size()) row.F = max_norm(antisym(F[n]));
    if (n < (int)G.size()) row.G = max_norm(antisym(G[n]));
    rows.push_back(row);
  }
  return rows;
}

template <class T, class Eval>
ClosureTensorsT<T> evaluate_fluxes(const FluxSeries& fs, int order, Eval eval) {
  ClosureTensorsT<T> out;
  for (int n = 0; n <= order; ++n) {
    out.F.push_back(eval(fs.F.grade(n)));
    out.G.push_back(eval(fs.G.grade(n)));
  }
  out.h_prime = eval(TensorSeries::from_scalar(fs.h)).v[0];
  out.h_prime_k = eval(fs.hk);
  TensorSeries rel(1, order);
  TensorSeries dh = D(fs.h, Var::MuVec);
  for (int i = 0; i < 3; ++i) rel.at({i}) = dh.at({i}) - fs.hk.at({i}).d_mu();
  out.relation_residual = max_norm(eval(rel));
  return out;
}

}  // namespace

FluxSeries flux_series(const Series& H, int order) {
  require_headroom(H.max_order(), order);
  FluxSeries fs;
  TensorSeries Hv = D(H, Var::MuVec);
  fs.F = D(Hv, Var::MuMat).truncated(order);
  fs.G = D(Hv, Var::LamVec).truncated(order);
  fs.h = H.d_mu().truncated(order + 1);
  fs.hk = Hv.truncated(order + 1);
  return fs;
}

ClosureTensors flux_tensors(const Series& H, int order, const Multipliers& at,
                            const PsiRealization& real) {
  auto fs = flux_series(H, order);
  return evaluate_fluxes<double>(fs, order,
                                 [&](const TensorSeries& t) { return t.evaluate(at, real); });
}

ClosureTensorsQ flux_tensors_exact(const Series& H, int order, const Multipliers& at,
                                   const PsiRealization& real) {
  auto fs = flux_series(H, order);
  return evaluate_fluxes<Rational>(
      fs, order, [&](const TensorSeries& t) { return t.evaluate_exact(at, real); });
}

DeltaFluxSeries delta_flux_series(const SolutionParams& params, int order) {
  if (order < 0) fail(ErrorKind::Input, "negative order");
  int M = order + 1;
  Invariants inv(M);
  Rational b1 = params.beta.count(1) ? params.beta.at(1) : Rational(0);

  // w_r = (2r+3)/r! beta_r
  Series s1(M), tail1(M), tailG1(M), tailG2(M);
  for (const auto& [r, b] : params.beta) {
    if (b == 0) continue;
    Rational w = Rational(2 * r + 3) / factorial(r) * b;
    s1 += powr(inv.G0, r).scaled(w);
    if (r < 2) continue;
    tail1 += powr(inv.G0, r - 1).scaled(w);
    tailG1 += powr(inv.G0, r - 2).scaled(w * (r - 1));
    tailG2 += powr(inv.G0, r - 2).scaled(w * (2 * r - 3));
  }
  TensorSeries dF = D(poly_series(params.F, inv), Var::MuMat);
  Series F1 = poly_series(params.F.partial(1), inv), F2 = poly_series(params.F.partial(2), inv);
  auto mat = [&](int i, int j) { return Series::variable(var_mat(i, j), M); };
  // delta^{k(i} X^{j)}
  auto sym = [&](int k, int i, int j, const std::array<Series, 3>& X) {
    Series s(M);
    if (k == i) s += X[j];
    if (k == j) s += X[i];
    return s.scaled(Rational(1, 2));
  };

  DeltaFluxSeries out{TensorSeries(3, order), TensorSeries(2, order)};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Series dl = sym(k, i, j, inv.lam);
        Series v = inv.lam[k] * dF.at({i, j});
        Series br = (inv.mll * dl).scaled(Rational(4)) +
                    inv.lam[k] * ((mat(i, j) * inv.G0).scaled(Rational(2)) -
                                  (inv.lam[i] * inv.Ml[j] + inv.lam[j] * inv.Ml[i]).scaled(Rational(2)));
        v += br.scaled(Rational(-5, 4) * b1);
        v += (s1 * dl).mul_lambda(1).scaled(Rational(2));
        v -= dl * inv.mll * tail1;
        out.F.at({k, i, j}) = v.truncated(order);
      }
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Series v = (s1 * inv.lam[k]).mul_var(var_mu(i));
      v += inv.lam[k] * (F1 * inv.G1.d_var(var_lam(i)) + F2 * inv.G2.d_var(var_lam(i)));
      v -= (inv.lam[k] * inv.MMl[i]).scaled(Rational(5) * b1);
      v -= (inv.lam[i] * inv.Ml[k] * inv.mll * tailG1).scaled(Rational(2));
      v -= inv.lam[k] * inv.Ml[i] * inv.mll * tailG2;
      v -= (inv.lam[k] * inv.MMl[i] * tail1).scaled(Rational(2));
      out.G.at({k, i}) = v.truncated(order);
    }
  return out;
}

DeltaFluxT<double> delta_flux(const SolutionParams& params, int order, const Multipliers& at) {
  auto ds = delta_flux_series(params, order);
  PolyFamily real;  // the remainders carry no psi
  DeltaFluxT<double> out;
  for (int n = 0; n <= order; ++n) {
    out.F.push_back(ds.F.grade(n).evaluate(at, real));
    out.G.push_back(ds.G.grade(n).evaluate(at, real));
  }
  return out;
}

DeltaFluxT<Rational> delta_flux_exact(const SolutionParams& params, int order,
                                      const Multipliers& at) {
  auto ds = delta_flux_series(params, order);
  PolyFamily real;
  DeltaFluxT<Rational> out;
  for (int n = 0; n <= order; ++n) {
    out.F.push_back(ds.F.grade(n).evaluate_exact(at, real));
    out.G.push_back(ds.G.grade(n).evaluate_exact(at, real));
  }
  return out;
}

DenseTensor antisym_first_pair(const DenseTensor& t) { return antisym(t); }
DenseTensorQ antisym_first_pair(const DenseTensorQ& t) { return antisym(t); }

TensorSeries antisym_first_pair(const TensorSeries& t) {
  if (t.rank() < 2) fail(ErrorKind::InvalidRank, "antisymmetrization needs rank >= 2");
  TensorSeries out(t.rank(), t.max_order());
  size_t inner = Dense<int>::pow3(t.rank() - 2);
  for (size_t k = 0; k < 3; ++k)
    for (size_t i = 0; i < 3; ++i)
      for (size_t r = 0; r < inner; ++r) {
        size_t a = (k * 3 + i) * inner + r, b = (i * 3 + k) * inner + r;
        out.comps()[a] = (t.comps()[a] - t.comps()[b]).scaled(Rational(1, 2));
      }
  return out;
}

std::vector<AntisymRow<double>> antisym_profile(const std::vector<DenseTensor>& F,
                                                const std::vector<DenseTensor>& G,
                                                int max_order) {
  return profile(F, G, max_order);
}

std::vector<AntisymRow<Rational>> antisym_profile(const std::vector<DenseTensorQ>& F,
                                                  const std::vector<DenseTensorQ>& G,
                                                  int max_order) {
  return profile(F, G, max_order);
}

// ---- beta_0 ansatz ----

namespace {

// 2 lambda_j dH2^k/dmu_ij for f_{idx+1} = G0^m, all other f zero.
TensorSeries ansatz_column(int idx, int m, const Invariants& inv) {
  int M = inv.G0.max_order();
  Series g = powr(inv.G0, m);
  TensorSeries H2(1, M);
  for (int k = 0; k < 3; ++k) {
    Series s(M);
    switch (idx) {
      case 0: s = inv.MMl[k]; break;
      case 1: s = inv.tr * inv.Ml[k]; break;
      case 2: s = inv.mll * inv.Ml[k]; break;
      case 3: s = inv.lam[k] * inv.tr * inv.tr; break;
      case 4: s = inv.lam[k] * inv.mll * inv.mll; break;
      case 5: s = inv.lam[k] * inv.mll * inv.tr; break;
      case 6: s = inv.lam[k] * inv.mumu; break;
      case 7: s = inv.lam[k] * inv.mml; break;
    }
    H2.at({k}) = g * s;
  }
  TensorSeries d = D(H2, Var::MuMat);  // (k,i,j)
  TensorSeries out(2, M);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Series s(M);
      for (int j = 0; j < 3; ++j) s += d.at({k, i, j}).mul_var(var_lam(j));
      out.at({k, i}) = s.scaled(Rational(2));
    }
  return out;
}

// 3 [delta^{ki} mll + 4 lambda^{(k} (M lambda)^{i)}], to be scaled by beta_0.
TensorSeries beta0_source(const Invariants& inv) {
  int M = inv.G0.max_order();
  TensorSeries out(2, M);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Series s = (inv.lam[k] * inv.Ml[i] + inv.lam[i] * inv.Ml[k]).scaled(Rational(2));
      if (k == i) s += inv.mll;
      out.at({k, i}) = s.scaled(Rational(3));
    }
  return out;
}

using Key = std::pair<size_t, Mono>;

void collect(const TensorSeries& t, std::map<Key, Rational>& row) {
  for (size_t f = 0; f < t.comps().size(); ++f)
    for (const auto& [m, c] : t.comps()[f].terms()) {
      auto q = c.as_rational();
      if (!q) fail(ErrorKind::Input, "ansatz coefficient is not rational");
      row[{f, m}] += *q;
    }
}

std::string poly_str(const std::vector<Rational>& c) {
  std::string s;
  for (size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(c[m]);
    if (m) s += m == 1 ? "*G0" : "*G0^" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Beta0Report check_beta0(const Beta0Ansatz& a) {
  if (a.degree < 0 || a.degree > 5) fail(ErrorKind::Input, "ansatz degree must be in 0..5");
  int d = a.degree, nper = d + 1, n = 8 * nper;
  for (const auto& f : a.f)
    if ((int)f.size() > nper) fail(ErrorKind::Input, "candidate exceeds the ansatz degree");
  Invariants inv(2 * d + 8);

  std::vector<std::map<Key, Rational>> cols(n);
  for (int idx = 0; idx < 8; ++idx)
    for (int m = 0; m <= d; ++m) collect(ansatz_column(idx, m, inv), cols[idx * nper + m]);
  std::map<Key, Rational> rhs_src;
  collect(beta0_source(inv), rhs_src);

  // Equations: one per (component, monomial); A c = -beta0 * src.
  std::map<Key, size_t> eq_index;
  for (const auto& c : cols)
    for (const auto& [k, v] : c) eq_index.emplace(k, 0);
  for (const auto& [k, v] : rhs_src) eq_index.emplace(k, 0);
  size_t ne = 0;
  for (auto& [k, i] : eq_index) i = ne++;
  std::vector<std::vector<Rational>> A(ne, std::vector<Rational>(n + 1, Rational(0)));
  for (int j = 0; j < n; ++j)
    for (const auto& [k, v] : cols[j]) A[eq_index[k]][j] = v;
  for (const auto& [k, v] : rhs_src) A[eq_index[k]][n] = -a.beta0 * v;

  Beta0Report rep;
  rep.unknowns = n;
  rep.equations = static_cast<int>(ne);

  // Candidate residual before elimination destroys A.
  {
    bool zero = true;
    for (size_t e = 0; e < ne && zero; ++e) {
      Rational acc = -A[e][n];
      for (int idx = 0; idx < 8; ++idx)
        for (size_t m = 0; m < a.f[idx].size(); ++m) acc += A[e][idx * nper + m] * a.f[idx][m];
      zero = acc == 0;
    }
    rep.candidate_zero = zero;
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int c = 0; c < n && row < ne; ++c) {
    size_t p = row;
    while (p < ne && A[p][c] == 0) ++p;
    if (p == ne) continue;
    std::swap(A[p], A[row]);
    Rational inv_p = 1 / A[row][c];
    for (int j = c; j <= n; ++j) A[row][j] *= inv_p;
    for (size_t r2 = 0; r2 < ne; ++r2) {
      if (r2 == row || A[r2][c] == 0) continue;
      Rational f = A[r2][c];
      for (int j = c; j <= n; ++j) A[r2][j] -= f * A[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  rep.rank = static_cast<int>(row);
  rep.solvable = true;
  for (size_t r2 = row; r2 < ne; ++r2)
    if (A[r2][n] != 0) rep.solvable = false;
  if (!rep.solvable) return rep;

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> vecs;  // particular first, then nullspace
  std::vector<Rational> part(n, Rational(0));
  for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) part[pivot_col[r2]] = A[r2][n];
  vecs.push_back(part);
  for (int fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[fcol] = 1;
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) v[pivot_col[r2]] = -A[r2][fcol];
    vecs.push_back(v);
  }

  auto coef = [&](const std::vector<Rational>& v, int idx, int m) {
    return (m < 0 || m > d) ? Rational(0) : v[idx * nper + m];
  };
  rep.f1_f2_vanish = true;
  rep.f7_relation = true;
  for (const auto& v : vecs) {
    for (int m = 0; m <= d; ++m)
      if (coef(v, 0, m) != 0 || coef(v, 1, m) != 0) rep.f1_f2_vanish = false;
    // 4 f7 = 2 f2 + 2 f3 G0 - 2 f8 G0
    for (int m = 0; m <= d + 1; ++m)
      if (4 * coef(v, 6, m) - 2 * coef(v, 1, m) - 2 * coef(v, 2, m - 1) + 2 * coef(v, 7, m - 1) != 0)
        rep.f7_relation = false;
  }
  for (size_t b = 0; b < vecs.size(); ++b) {
    std::string s = b == 0 ? "particular:" : "direction:";
    bool any = false;
    for (int idx = 0; idx < 8; ++idx) {
      std::vector<Rational> c(vecs[b].begin() + idx * nper, vecs[b].begin() + (idx + 1) * nper);
      if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) continue;
      s += " f" + std::to_string(idx + 1) + " = " + poly_str(c) + ";";
      any = true;
    }
    if (!any) s += " 0";
    rep.family.push_back(s);
  }
  return rep;
}

// ---- thermodynamic table ----

void ThermoTable::validate() const {
  if (rho.size() < 4 || T.size() < 4)
    fail(ErrorKind::Grid, "finite differences need at least 4 grid points per direction");
  for (const auto* g : {&rho, &T})
    for (size_t i = 0; i < g->size(); ++i) {
      if (!std::isfinite((*g)[i])) fail(ErrorKind::Grid, "non-finite grid value");
      if (i && !((*g)[i] > (*g)[i - 1])) fail(ErrorKind::Grid, "grid not strictly increasing");
    }
  size_t n = rho.size() * T.size();
  for (const auto* a : {&p, &eps, &h2, &beta2, &beta3}) {
    if (a->size() != n) fail(ErrorKind::Grid, "sample count does not match the grid");
    for (double x : *a)
      if (!std::isfinite(x)) fail(ErrorKind::Grid, "non-finite sample");
  }
  for (double r : rho)
    if (r == 0) fail(ErrorKind::Grid, "rho = 0 on the grid");
}

double ThermoTable::f(size_t i, size_t j) const {
  size_t n = i * T.size() + j;
  return beta2[n] - 5.0 / 6.0 * beta3[n] -
         (4 * h2[n] + 10.0 / 3.0 * p[n] * T[j]) * (eps[n] + p[n] / rho[i]);
}

ThermoTable read_thermo_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::Input, "empty thermo table");
  auto split = [](const std::string& l) {
    std::vector<std::string> out;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      out.push_back(cell);
    }
    return out;
  };
  auto head = split(line);
  const std::vector<std::string> want{"T", "p", "eps", "h2", "beta2", "beta3"};
  if (head.size() != 7 || (head[0] != "rho" && head[0] != "\xCF\x81") ||
      !std::equal(want.begin(), want.end(), head.begin() + 1))
    fail(ErrorKind::Input, "thermo header must be rho,T,p,eps,h2,beta2,beta3");
  std::vector<std::array<double, 7>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    auto cells = split(line);
    if (cells.size() != 7) fail(ErrorKind::Input, "line " + std::to_string(lineno) + ": need 7 fields");
    std::array<double, 7> r;
    for (int c = 0; c < 7; ++c) {
      size_t used = 0;
      try {
        r[c] = std::stod(cells[c], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cells[c].size())
        fail(ErrorKind::Input, "line " + std::to_string(lineno) + ": bad number '" + cells[c] + "'");
    }
    rows.push_back(r);
  }
  ThermoTable t;
  for (const auto& r : rows) {
    if (t.rho.empty() || t.rho.back() != r[0]) t.rho.push_back(r[0]);
    if (t.rho.size() == 1) t.T.push_back(r[1]);
  }
  if (t.T.empty() || rows.size() != t.rho.size() * t.T.size())
    fail(ErrorKind::Grid, "rows do not form a rho-major grid");
  for (size_t n = 0; n < rows.size(); ++n) {
    const auto& r = rows[n];
    if (r[0] != t.rho[n / t.T.size()] || r[1] != t.T[n % t.T.size()])
      fail(ErrorKind::Grid, "rows do not form a rho-major grid");
    t.p.push_back(r[2]);
    t.eps.push_back(r[3]);
    t.h2.push_back(r[4]);
    t.beta2.push_back(r[5]);
    t.beta3.push_back(r[6]);
  }
  t.validate();
  return t;
}

void write_thermo_csv(std::ostream& out, const ThermoTable& t) {
  out << "rho,T,p,eps,h2,beta2,beta3\n";
  auto old = out.precision(17);
  for (size_t i = 0; i < t.rho.size(); ++i)
    for (size_t j = 0; j < t.T.size(); ++j) {
      size_t n = i * t.T.size() + j;
      out << t.rho[i] << ',' << t.T[j] << ',' << t.p[n] << ',' << t.eps[n] << ',' << t.h2[n]
          << ',' << t.beta2[n] << ',' << t.beta3[n] << '\n';
    }
  out.precision(old);
}

ThermoTable synthetic_thermo_table(const std::vector<double>& rho, const std::vector<double>& T,
                                   const std::function<double(double, double)>& f_target) {
  ThermoTable t;
  t.rho = rho;
  t.T = T;
  for (double r : rho)
    for (double th : T) {
      double p = r * th * (1 + r / 10), eps = 1.5 * th + r / 5, h2 = th * th + r, b3 = r * th / 2;
      t.p.push_back(p);
      t.eps.push_back(eps);
      t.h2.push_back(h2);
      t.beta3.push_back(b3);
      t.beta2.push_back(f_target(r, th) + 5.0 / 6.0 * b3 + (4 * h2 + 10.0 / 3.0 * p * th) * (eps + p / r));
    }
  return t;
}

namespace {

// Central differences inside, one-sided at the ends.
double fd(const std::vector<double>& x, const std::vector<double>& y, size_t i) {
  size_t n = x.size();
  if (i == 0) return (y[1] - y[0]) / (x[1] - x[0]);
  if (i == n - 1) return (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  return (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
}

double max_step(const std::vector<double>& x) {
  double h = 0;
  for (size_t i = 1; i < x.size(); ++i) h = std::max(h, x[i] - x[i - 1]);
  return h;
}

}  // namespace

IntegrationConstantReport verify_integration_constant(const ThermoTable& t, double tol) {
  if (!(tol > 0)) fail(ErrorKind::Input, "tolerance must be positive");
  t.validate();
  size_t nr = t.rho.size(), nt = t.T.size();
  IntegrationConstantReport rep;
  double fscale = 1, gscale = 1, sum = 0;
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nt; ++j) {
      double f = t.f(i, j);
      fscale = std::max(fscale, std::fabs(f));
      gscale = std::max(gscale, std::fabs(t.T[j] * f));
      sum += t.T[j] * f;
    }
  rep.constant = sum / static_cast<double>(nr * nt);

  for (size_t j = 0; j < nt; ++j) {
    std::vector<double> col(nr);
    for (size_t i = 0; i < nr; ++i) col[i] = t.f(i, j);
    for (size_t i = 0; i < nr; ++i) rep.rho_derivative = std::max(rep.rho_derivative, std::fabs(fd(t.rho, col, i)));
  }
  for (size_t i = 0; i < nr; ++i) {
    std::vector<double> g(nt);
    for (size_t j = 0; j < nt; ++j) g[j] = t.T[j] * t.f(i, j);
    for (size_t j = 0; j < nt; ++j) {
      rep.tf_derivative = std::max(rep.tf_derivative, std::fabs(fd(t.T, g, j)));
      rep.tf_spread = std::max(rep.tf_spread, std::fabs(g[j] - rep.constant));
    }
  }
  double hr = max_step(t.rho), ht = max_step(t.T);
  rep.rho_threshold = tol + hr * hr * fscale;
  rep.tf_threshold = tol + ht * ht * gscale;
  rep.rho_independent = rep.rho_derivative <= rep.rho_threshold;
  rep.tf_constant = rep.tf_derivative <= rep.tf_threshold;
  rep.constant_zero = std::fabs(rep.constant) <= tol;

  std::ostringstream v;
  if (!rep.rho_independent)
    v << "f depends on rho";
  else if (!rep.tf_constant)
    v << "T f is not constant";
  else if (rep.constant_zero)
    v << "first-order symmetry holds";
  else
    v << "integration constant " << rep.constant << " is nonzero: first-order symmetry fails";
  rep.verdict = v.str();
  return rep;
}

}  // namespace c14
