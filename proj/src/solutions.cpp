#include "c14/solutions.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <sstream>

namespace c14 {

namespace {

Series var(int v, int M) { return Series::variable(v, M); }

TensorSeries D(const Series& s, Var v) { return differentiate(s, v); }
TensorSeries D(const TensorSeries& s, Var v) { return differentiate(s, v); }

Series pow_series(const Series& x, int n, int M) {
  Series r = Series::constant(LambdaScalar(1), M);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

// ((2r+3)/r!) beta_r for the active beta terms; r = 0 only when injected.
std::map<int, Rational> beta_weights(const SolutionParams& p) {
  std::map<int, Rational> w;
  for (const auto& [r, b] : p.beta)
    if (b != 0) w[r] = Rational(2 * r + 3) / factorial(r) * b;
  if (p.beta0_injection && *p.beta0_injection != 0) w[0] = Rational(3) * *p.beta0_injection;
  return w;
}

}  // namespace

PolyF PolyF::monomial(int a, int b, int c, const Rational& k) {
  PolyF f;
  if (a < 0 || b < 0 || c < 0) fail(ErrorKind::Input, "negative exponent in F");
  if (k != 0) f.coeffs[{a, b, c}] = k;
  return f;
}

PolyF PolyF::named(const std::string& name) {
  if (name == "0" || name == "zero") return zero();
  if (name == "G1") return monomial(0, 1, 0);
  if (name == "G1^2") return monomial(0, 2, 0);
  if (name == "G2") return monomial(0, 0, 1);
  fail(ErrorKind::Input, "unknown F '" + name + "'");
}

PolyF PolyF::partial(int v) const {
  if (v < 0 || v > 2) fail(ErrorKind::Input, "F has three arguments");
  PolyF out;
  for (const auto& [e, c] : coeffs) {
    if (e[v] == 0) continue;
    auto d = e;
    --d[v];
    out.coeffs[d] += c * e[v];
  }
  return out;
}

std::string PolyF::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int v = 0; v < 3; ++v)
      if (e[v]) os << "*G" << v << "^" << e[v];
  }
  return os.str();
}

Invariants::Invariants(int M) : G0(M), G1(M), G2(M), mll(M), tr(M), mumu(M), mml(M) {
  for (int k = 0; k < 3; ++k) {
    lam[k] = var(var_lam(k), M);
    Ml[k] = Series(M);
    MMl[k] = Series(M);
  }
  for (int a = 0; a < 3; ++a) {
    G0 += lam[a] * lam[a];
    tr += var(var_mat(a, a), M);
    for (int b = 0; b < 3; ++b) {
      Series mab = var(var_mat(a, b), M);
      mll += mab.mul_var(var_lam(a)).mul_var(var_lam(b));
      mumu += mab * mab;
      Ml[a] += mab.mul_var(var_lam(b));
    }
  }
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 3; ++c) MMl[k] += var(var_mat(k, c), M) * Ml[c];
  for (int b = 0; b < 3; ++b) mml += Ml[b] * Ml[b];
  G1 = G0 * tr - mll;
  G2 = G0 * mumu - mml.scaled(Rational(2)) + (tr * mll).scaled(Rational(2)) - G0 * tr * tr;
}

Series poly_series(const PolyF& f, const Invariants& inv) {
  int M = inv.G0.max_order();
  Series out(M);
  for (const auto& [e, c] : f.coeffs)
    out += (pow_series(inv.G0, e[0], M) * pow_series(inv.G1, e[1], M) *
            pow_series(inv.G2, e[2], M))
               .scaled(c);
  return out.truncated(M);
}

void SolutionParams::validate() const {
  for (const auto& [r, b] : beta)
    if (r < 1) fail(ErrorKind::Input, "beta_" + std::to_string(r) + " is not a free constant (r >= 1)");
  for (const auto& [r, c] : psi_const)
    if (r < 0 || r % 2) fail(ErrorKind::Input, "psi constant index must be even and >= 0");
  for (const auto& [m, c] : ttH0.terms()) {
    if (mono_s(m) != 0 || mono_p(m) != 0 || c.has_psi())
      fail(ErrorKind::Input, "ttH0 may depend on mu_ab, lambda and lambda_c only");
  }
  auto rep = verify_table(theta, theta.max_order);
  if (!rep.ok())
    fail(ErrorKind::Input, "theta table violates " + rep.violations.front().relation + " at " +
                               rep.violations.front().key.str());
}

Series build_H1(int max_order) {
  if (max_order < 0) fail(ErrorKind::Input, "negative order");
  int M = max_order + 2;
  Series H(M);
  for (int p = 0; p <= M; ++p)
    for (int q = 0; p + q <= M; ++q)
      for (int r = (p % 2); p + q + r <= M; r += 2) {
        int n = (p + r) / 2, e = q + n;
        LambdaScalar c = LambdaScalar::psi(n, 0, -e, pow(Rational(-1, 2), e));
        for (int i = 0; i < r; ++i) c = d_lambda(c);
        for (int i = 0; i < p; ++i) c = d_mu(c);
        int w = p + 2 * q + r + 1;
        c *= double_factorial(w) / Rational(w) / (factorial(p) * factorial(q) * factorial(r));
        H += delta_contraction(p, q, r, {}, M).scaled(c);
      }
  return H;
}

namespace {

Series hstar0_at(const SolutionParams& params, int M) {
  Invariants inv(M);
  Series H(M);
  for (const auto& [r, c] : params.psi_const) {
    if (r + 2 > M || c == 0) continue;
    H += delta_contraction(0, 0, r + 2, {}, M).scaled(c / factorial(r + 2));
  }
  for (const auto& [r, w] : beta_weights(params)) {
    Series g = pow_series(inv.G0, r, M);
    H -= (g * inv.G0).mul_lambda(1).scaled(Rational(2) * w);
    H += (g * inv.mll).scaled(w);
  }
  return H;
}

TensorSeries ttHk_at(const SolutionParams& params, int M) {
  // One extra order so the lambda_k derivative stays exact through M.
  Invariants inv(M + 1);
  auto w = beta_weights(params);
  Rational b1 = params.beta.count(1) ? params.beta.at(1) : Rational(0);
  Series Fs = poly_series(params.F, inv);

  Series inner(M + 1);
  for (const auto& [r, wr] : w)
    inner += (pow_series(inv.G0, r, M + 1) *
              (inv.mll.mul_lambda(1) - inv.G0.mul_lambda(2)))
                 .scaled(wr);

  Series tail1(M + 1), tail2(M + 1);  // sums over r >= 2
  for (const auto& [r, wr] : w) {
    if (r < 2) continue;
    tail1 += pow_series(inv.G0, r - 1, M + 1).scaled(wr);
    tail2 += pow_series(inv.G0, r - 2, M + 1).scaled(wr * (2 * r - 3));
  }

  TensorSeries out(1, M);
  for (int k = 0; k < 3; ++k) {
    Series v = inv.lam[k] * Fs;
    v += ((inv.mll * inv.Ml[k]).scaled(Rational(4)) +
          inv.lam[k] * (inv.mumu * inv.G0 + inv.mml.scaled(Rational(2))))
             .scaled(Rational(-5, 4) * b1);
    for (const auto& [r, c] : params.psi_const) {
      if (c == 0 || r + 1 > M + 1) continue;
      Series a = delta_contraction(0, 0, r + 1, {k}, M + 1).mul_lambda(1);
      Series b = delta_contraction(0, 1, r + 1, {k}, M + 1)
                     .scaled(Rational(-1, 2) * Rational(r + 3, r + 2));
      v += (a + b).scaled(c / factorial(r + 1));
    }
    v += inner.d_var(var_lam(k));
    v -= inv.Ml[k] * inv.mll * tail1;
    v -= (inv.lam[k] * inv.mll * inv.mll * tail2).scaled(Rational(1, 4));
    v -= inv.lam[k] * inv.mml * tail1;
    out.comps()[k] = v.truncated(M);
  }
  return out;
}

}  // namespace

Series build_Hstar0(const SolutionParams& params, int max_order) {
  if (max_order < 0) fail(ErrorKind::Input, "negative order");
  return hstar0_at(params, max_order + 2);
}

TensorSeries build_ttHk(const SolutionParams& params, int max_order) {
  if (max_order < 0) fail(ErrorKind::Input, "negative order");
  return ttHk_at(params, max_order + 2);
}

Series build_DeltaH(const SolutionParams& params, int max_order) {
  if (max_order < 0) fail(ErrorKind::Input, "negative order");
  int M = max_order + 2;
  Series H(M);
  const auto& th = params.theta;
  int smax = th.s_bound();
  for (int p = 0; p <= M; ++p)
    for (int q = 0; p + q <= M; ++q)
      for (int r = p % 2; p + q + r <= M; r += 2) {
        for (int s = 0; s <= smax; ++s) {
          LambdaScalar t = th.get({p, q, r, s});
          if (t.is_zero()) continue;
          Rational w = 1 / (factorial(p) * factorial(q) * factorial(r) * factorial(s + 1));
          H += delta_contraction(p, q, r, {}, M).scaled(t * w).mul_mu(s + 1);
        }
        if (p + 2 + q + r <= M) {
          LambdaScalar t = th.get({p, q + 1, r, 0});
          if (!t.is_zero()) {
            Rational w = 1 / (factorial(p + 2) * factorial(q) * factorial(r));
            H += delta_contraction(p + 2, q, r, {}, M).scaled(t * w);
          }
        }
      }

  Series Hs = hstar0_at(params, M + 1);
  H += Hs.truncated(M).mul_mu(1);
  TensorSeries dHs = D(Hs, Var::MuMat);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      H += dHs.at({i, j}).mul_var(var_mu(i)).mul_var(var_mu(j)).scaled(Rational(1, 2));
  TensorSeries tt = ttHk_at(params, M);
  for (int i = 0; i < 3; ++i) H += tt.comps()[i].mul_var(var_mu(i));
  if (!params.ttH0.is_zero()) H += params.ttH0;
  return H.truncated(M);
}

ConditionSet parse_condition_set(const std::string& name) {
  if (name == "core") return ConditionSet::Core;
  if (name == "hstar0") return ConditionSet::HStar0;
  if (name == "vector") return ConditionSet::Vector;
  if (name == "galilean") return ConditionSet::Galilean;
  fail(ErrorKind::Input, "unknown condition set '" + name + "'");
}

std::string condition_set_name(ConditionSet c) {
  switch (c) {
    case ConditionSet::Core: return "core";
    case ConditionSet::HStar0: return "hstar0";
    case ConditionSet::Vector: return "vector";
    case ConditionSet::Galilean: return "galilean";
  }
  return "?";
}

void require_headroom(int series_order, int order) {
  if (order < 0) fail(ErrorKind::Input, "negative verification order");
  if (series_order < order + 2)
    fail(ErrorKind::Headroom, "series exact through order " + std::to_string(series_order) +
                                  ", need " + std::to_string(order + 2) + " to verify order " +
                                  std::to_string(order));
}

namespace {

struct Builder {
  int rank, order;
  std::deque<TensorSeries> terms;  // add() hands out references
  Builder(int rank_, int order_) : rank(rank_), order(order_) {}
  TensorSeries& add() {
    terms.emplace_back(rank, order);
    return terms.back();
  }
  ConditionTerms done(std::string name) {
    std::vector<TensorSeries> out;
    for (auto& t : terms) out.push_back(t.truncated(order));
    return {std::move(name), std::move(out)};
  }
};

Series delta_ki(int k, int i, const Series& s) { return k == i ? s : Series(s.max_order()); }

}  // namespace

std::vector<ConditionTerms> core_conditions(const Series& H, int order) {
  require_headroom(H.max_order(), order);
  std::vector<ConditionTerms> out;
  Series Hmu = H.d_mu();
  TensorSeries Hv = D(H, Var::MuVec);
  {
    Builder b(2, order);
    b.add() = D(Hmu, Var::MuMat);
    b.add() = D(Hv, Var::MuVec).scaled(-1);
    out.push_back(b.done("mu_mat_symmetry"));
  }
  {
    Builder b(1, order);
    b.add() = D(Hmu, Var::LamVec);
    b.add() = D(H.d_lambda(), Var::MuVec).scaled(-1);
    out.push_back(b.done("lambda_symmetry"));
  }
  TensorSeries Hmu_k = D(Hmu, Var::MuVec), Hmu_kj = D(Hmu, Var::MuMat),
               Hk_ij = D(Hv, Var::MuMat), Hmu_l = D(Hmu, Var::LamVec);
  Builder b(2, order);
  auto &T1 = b.add(), &T2 = b.add(), &T3 = b.add(), &T4 = b.add(), &T5 = b.add(), &T6 = b.add();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      T1.at({k, i}) = Hmu_k.at({k}).mul_var(var_mu(i));
      Series t2(order + 1), t4(order + 1);
      for (int j = 0; j < 3; ++j) {
        t2 += Hmu_kj.at({k, j}).mul_var(var_mat(j, i));
        t4 += Hk_ij.at({k, i, j}).mul_var(var_lam(j));
      }
      T2.at({k, i}) = t2.scaled(Rational(2));
      T3.at({k, i}) = Hmu_kj.at({k, i}).mul_lambda(1).scaled(Rational(2));
      T4.at({k, i}) = t4.scaled(Rational(2));
      T5.at({k, i}) = Hmu_l.at({k}).mul_var(var_lam(i));
      T6.at({k, i}) = delta_ki(k, i, Hmu);
    }
  out.push_back(b.done("galilean_flux_balance"));
  return out;
}

std::vector<ConditionTerms> galilean_conditions(const Series& H, int order) {
  require_headroom(H.max_order(), order);
  Series h = H.d_mu();
  TensorSeries hk = D(H, Var::MuVec);
  // Boost derivative of a potential f: df/dmu mu_i + df/dmu_h (2 mu_ih + 2 lambda delta_hi)
  //   + 2 df/dmu_hi lambda_h + df/dlambda lambda_i.
  auto boost = [&](const Series& f, std::vector<Series>& parts, int i) {
    TensorSeries fv = D(f, Var::MuVec), fm = D(f, Var::MuMat);
    Series a = f.d_mu().mul_var(var_mu(i));
    Series bsum(order + 1), c(order + 1);
    for (int hh = 0; hh < 3; ++hh) {
      bsum += fv.at({hh}).mul_var(var_mat(i, hh)).scaled(Rational(2));
      c += fm.at({hh, i}).mul_var(var_lam(hh)).scaled(Rational(2));
    }
    bsum += fv.at({i}).mul_lambda(1).scaled(Rational(2));
    parts = {a, bsum, c, f.d_lambda().mul_var(var_lam(i))};
  };
  std::vector<ConditionTerms> out;
  {
    Builder b(1, order);
    std::vector<TensorSeries*> T;
    for (int n = 0; n < 4; ++n) T.push_back(&b.add());
    for (int i = 0; i < 3; ++i) {
      std::vector<Series> parts;
      boost(h, parts, i);
      for (int n = 0; n < 4; ++n) T[n]->at({i}) = parts[n];
    }
    out.push_back(b.done("boost_scalar"));
  }
  Builder b(2, order);
  std::vector<TensorSeries*> T;
  for (int n = 0; n < 5; ++n) T.push_back(&b.add());
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      std::vector<Series> parts;
      boost(hk.at({k}), parts, i);
      for (int n = 0; n < 4; ++n) T[n]->at({k, i}) = parts[n];
      T[4]->at({k, i}) = delta_ki(k, i, h);
    }
  out.push_back(b.done("boost_vector"));
  return out;
}

std::vector<ConditionTerms> hstar0_conditions(const Series& Hs, const ThetaTable& theta,
                                              int order) {
  require_headroom(Hs.max_order(), order);
  std::vector<ConditionTerms> out;
  Series Hl = Hs.d_lambda();
  TensorSeries Hm = D(Hs, Var::MuMat);
  TensorSeries Hmm = D(Hm, Var::MuMat);
  TensorSeries Hml = D(Hm, Var::LamVec);
  TensorSeries Hlm = D(Hl, Var::MuMat);
  TensorSeries Hll = D(Hl, Var::LamVec);
  int M = order + 1;

  {
    Builder b(2, order);
    b.add() = Hlm;
    auto& th = b.add();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Series s(M);
        for (int q = 0; q <= order; ++q)
          for (int r = 0; q + r <= order; r += 2) {
            LambdaScalar t = theta.get({1, q, r + 1, 0});
            if (t.is_zero()) continue;
            s += delta_contraction(0, q, r, {i, j}, M)
                     .scaled(t * (1 / (factorial(q) * factorial(r))));
          }
        th.at({i, j}) = -s;
      }
    out.push_back(b.done("lambda_mu_mat_mixed"));
  }
  {
    Builder b(2, order);
    auto &A = b.add(), &B = b.add(), &C = b.add();
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) {
        Series a(M);
        for (int j = 0; j < 3; ++j) a += Hm.at({k, j}).mul_var(var_mat(j, i));
        A.at({k, i}) = a.scaled(Rational(2)).drop_var_family(var_lam(0), 3);
        B.at({k, i}) = Hm.at({k, i}).mul_lambda(1).scaled(Rational(2)).drop_var_family(var_lam(0), 3);
        C.at({k, i}) = delta_ki(k, i, Hs).drop_var_family(var_lam(0), 3);
      }
    out.push_back(b.done("trace_balance_at_zero_lambda_vec"));
  }
  {
    Builder b(3, order);
    auto &A = b.add(), &B = b.add();
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) {
          Series s(M), t(M);
          for (int q = 0; q <= order; ++q)
            for (int r = 1; q + r <= order; r += 2) {
              LambdaScalar c = theta.get({1, q, r, 0}) * Rational(2 * q + r + 2) +
                               theta.get({1, q + 1, r, 0}).mul_lambda(1) * Rational(2);
              if (c.is_zero()) continue;
              s += delta_contraction(0, q, r, {a, k, i}, M)
                       .scaled(c * (1 / (factorial(q) * factorial(r))));
            }
          for (int j = 0; j < 3; ++j) t += Hmm.at({i, j, k, a}).mul_var(var_lam(j));
          A.at({a, k, i}) = s;
          B.at({a, k, i}) = t.scaled(Rational(2));
        }
    out.push_back(b.done("mu_mat_curvature"));
  }
  {
    Builder b(2, order);
    std::vector<TensorSeries*> T;
    for (int n = 0; n < 6; ++n) T.push_back(&b.add());
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) {
        Series t0(M), t5(M);
        for (int j = 0; j < 3; ++j) {
          t0 += Hlm.at({k, j}).mul_var(var_mat(j, i));
          t5 += Hml.at({i, j, k}).mul_var(var_lam(j));
        }
        T[0]->at({k, i}) = t0.scaled(Rational(2));
        T[1]->at({k, i}) = Hlm.at({k, i}).mul_lambda(1).scaled(Rational(2));
        T[2]->at({k, i}) = Hm.at({k, i}).scaled(Rational(2));
        T[3]->at({k, i}) = Hll.at({k}).mul_var(var_lam(i));
        T[4]->at({k, i}) = delta_ki(k, i, Hl);
        T[5]->at({k, i}) = t5.scaled(Rational(2));
      }
    out.push_back(b.done("lambda_balance"));
  }
  {
    // Skew part in (i,a) of
    //   2 mu_ji d2H/dmu_ab dmu_kj lambda_b + 2 lambda d2H/dmu_ki dmu_ab lambda_b
    //   + lambda_i d2H/dmu_ab dlambda_k lambda_b + delta_ki dH/dmu_ab lambda_b
    auto part = [&](int n, int k, int i, int a) {
      Series s(M);
      for (int bb = 0; bb < 3; ++bb) {
        switch (n) {
          case 0:
            for (int j = 0; j < 3; ++j)
              s += Hmm.at({a, bb, k, j}).mul_var(var_mat(j, i)).mul_var(var_lam(bb));
            break;
          case 1: s += Hmm.at({k, i, a, bb}).mul_var(var_lam(bb)); break;
          case 2: s += Hml.at({a, bb, k}).mul_var(var_lam(bb)); break;
          case 3: s += Hm.at({a, bb}).mul_var(var_lam(bb)); break;
        }
      }
      switch (n) {
        case 0: return s.scaled(Rational(2));
        case 1: return s.mul_lambda(1).scaled(Rational(2));
        case 2: return s.mul_var(var_lam(i));
        default: return delta_ki(k, i, s);
      }
    };
    Builder b(3, order);
    for (int n = 0; n < 4; ++n) {
      auto& T = b.add();
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
          for (int a = 0; a < 3; ++a)
            T.at({k, i, a}) = (part(n, k, i, a) - part(n, k, a, i)).scaled(Rational(1, 2));
    }
    out.push_back(b.done("skew_integrability"));
  }
  return out;
}

std::vector<ConditionTerms> vector_conditions(const Series& Hs, const TensorSeries& ttHk,
                                              int order) {
  require_headroom(Hs.max_order(), order);
  require_headroom(ttHk.max_order(), order);
  if (ttHk.rank() != 1) fail(ErrorKind::Shape, "vector potential must carry one free index");
  std::vector<ConditionTerms> out;
  TensorSeries Hsl = D(Hs, Var::LamVec), Hm = D(Hs, Var::MuMat);
  {
    Builder b(1, order);
    auto &A = b.add(), &B = b.add();
    for (int i = 0; i < 3; ++i) {
      A.at({i}) = Hsl.at({i});
      B.at({i}) = -ttHk.at({i}).d_lambda();
    }
    out.push_back(b.done("lambda_vector_match"));
  }
  int M = order + 1;
  Builder b(2, order);
  std::vector<TensorSeries*> T;
  for (int n = 0; n < 5; ++n) T.push_back(&b.add());
  for (int k = 0; k < 3; ++k) {
    TensorSeries dk = D(ttHk.at({k}), Var::MuMat);
    for (int i = 0; i < 3; ++i) {
      Series t0(M), t4(M);
      for (int j = 0; j < 3; ++j) {
        t0 += Hm.at({k, j}).mul_var(var_mat(j, i));
        t4 += dk.at({i, j}).mul_var(var_lam(j));
      }
      T[0]->at({k, i}) = t0.scaled(Rational(2));
      T[1]->at({k, i}) = Hm.at({k, i}).mul_lambda(1).scaled(Rational(2));
      T[2]->at({k, i}) = Hsl.at({k}).mul_var(var_lam(i));
      T[3]->at({k, i}) = delta_ki(k, i, Hs);
      T[4]->at({k, i}) = t4.scaled(Rational(2));
    }
  }
  out.push_back(b.done("vector_balance"));
  return out;
}

bool VerifyReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

namespace {

Rational draw(std::mt19937_64& g, int lo, int hi, int den) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return Rational(lo + static_cast<long>(g() % span), den);
}

}  // namespace

std::vector<Multipliers> sample_points(int count, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<Multipliers> pts;
  for (int n = 0; n < count; ++n) {
    Multipliers m;
    m.mu = draw(g, -1000, 1000, 1000);
    m.lambda = draw(g, 1000, 2000, 1000);
    for (auto& x : m.mu_vec) x = draw(g, -100, 100, 1000);
    for (auto& x : m.mu_mat) x = draw(g, -100, 100, 1000);
    for (auto& x : m.lam_vec) x = draw(g, -100, 100, 1000);
    for (auto* x : {&m.mu, &m.lambda}) x->canonicalize();
    for (auto& x : m.mu_vec) x.canonicalize();
    for (auto& x : m.mu_mat) x.canonicalize();
    for (auto& x : m.lam_vec) x.canonicalize();
    pts.push_back(m);
  }
  return pts;
}

VerifyReport verify_conditions(const std::vector<ConditionTerms>& conds,
                               const VerifyOptions& opts) {
  if (opts.points < 1) fail(ErrorKind::Input, "need at least one sample point");
  if (!(opts.tol > 0)) fail(ErrorKind::Input, "tolerance must be positive");
  auto real = make_realization(opts.family);
  auto pts = sample_points(opts.points, opts.rng_seed);
  VerifyReport rep;
  for (const auto& c : conds) {
    ConditionReport cr;
    cr.condition = c.name;
    cr.order = opts.order;
    int rank = c.terms.empty() ? 0 : c.terms.front().rank();
    TensorSeries sum(rank, opts.order);
    for (const auto& t : c.terms) sum += t;
    cr.symbolic_zero = sum.truncated(opts.order).is_zero();

    size_t ncomp = sum.comps().size();
    std::vector<std::vector<CompiledSeries>> compiled(c.terms.size());
    for (size_t t = 0; t < c.terms.size(); ++t)
      for (size_t f = 0; f < ncomp; ++f) compiled[t].emplace_back(c.terms[t].comps()[f]);
    bool have_worst = false;
    for (const auto& pt : pts) {
      for (size_t f = 0; f < ncomp; ++f) {
        double v = 0, scale = 0;
        for (const auto& ct : compiled) {
          auto [x, ax] = ct[f].evaluate(pt, *real);
          v += x;
          scale += ax;
        }
        double rel = std::fabs(v) / std::max(scale, 1.0);
        if (std::isnan(rel)) rel = INFINITY;
        if (rel > cr.max_residual || !have_worst) {
          cr.max_residual = std::max(cr.max_residual, rel);
          cr.worst_point = pt;
          have_worst = true;
        }
      }
    }
    if (opts.rational_points > 0) {
      PolyFamily poly;
      bool zero = true;
      for (const auto& pt : sample_points(opts.rational_points, opts.rng_seed + 7919)) {
        for (size_t f = 0; f < ncomp && zero; ++f) {
          Rational acc = 0;
          for (const auto& t : c.terms) acc += t.comps()[f].evaluate_exact(pt, poly);
          zero = acc == 0;
        }
      }
      cr.rational_zero = zero;
    }
    cr.pass = cr.symbolic_zero && cr.max_residual <= opts.tol && cr.rational_zero.value_or(true);
    rep.conditions.push_back(cr);
  }
  return rep;
}

VerifyReport verify_potential(const Series& S, ConditionSet set, const VerifyOptions& opts,
                              const ThetaTable* theta, const TensorSeries* ttHk) {
  switch (set) {
    case ConditionSet::Core: return verify_conditions(core_conditions(S, opts.order), opts);
    case ConditionSet::Galilean:
      return verify_conditions(galilean_conditions(S, opts.order), opts);
    case ConditionSet::HStar0: {
      ThetaTable empty;
      return verify_conditions(hstar0_conditions(S, theta ? *theta : empty, opts.order), opts);
    }
    case ConditionSet::Vector:
      if (!ttHk) fail(ErrorKind::Input, "vector conditions need the vector potential");
      return verify_conditions(vector_conditions(S, *ttHk, opts.order), opts);
  }
  return {};
}

}  // namespace c14
