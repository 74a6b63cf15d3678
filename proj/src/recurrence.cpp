#include "c14/recurrence.hpp"

#include <algorithm>
#include <optional>

namespace c14 {

std::string ThetaKey::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
         std::to_string(s) + ")";
}

ThetaKey reduce_p(const ThetaKey& k) {
  int h = k.p / 2;
  return {k.p % 2, k.q + h, k.r, k.s + h};
}

LambdaScalar ThetaTable::get(const ThetaKey& k) const {
  auto it = entries.find(k);
  if (it != entries.end()) return it->second;
  if (k.p >= 2) {
    it = entries.find(reduce_p(k));
    if (it != entries.end()) return it->second;
  }
  return {};
}

bool TableReport::has(const std::string& relation) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const TableViolation& v) { return v.relation == relation; });
}

namespace {

// Value forced by a normalization, if any.
std::optional<std::string> normalization_of(const ThetaKey& k) {
  if (k.p == 0 && k.s == 0) return "norm_s0";
  if (k.p == 0 && k.q == 0 && k.r == 0) return "norm_equilibrium";
  if (k.p == 1 && k.s == 0) return "norm_p1_s0";
  return std::nullopt;
}

struct Bounds {
  int n, s;
  bool in(const ThetaKey& k) const {
    return k.p >= 0 && k.q >= 0 && k.r >= 0 && k.s >= 0 && k.order() <= n && k.s <= s;
  }
};

// Linear relation sum_i c_i lambda^{e_i} D_i(theta_{k_i}) = 0, where D_i is the
// identity or d/dlambda.
struct Term {
  ThetaKey key;
  Rational c;
  int lam_e = 0;
  bool deriv = false;
};
struct Relation {
  std::string name;
  ThetaKey at;
  std::vector<Term> terms;
};

LambdaScalar apply(const Term& t, const LambdaScalar& v) {
  LambdaScalar x = t.deriv ? d_lambda(v) : v;
  return (x * t.c).mul_lambda(t.lam_e);
}

// Relations among base keys (p in {0,1}) obtained by folding p = 2 with reduce_p.
std::vector<Relation> base_relations(const Bounds& b) {
  std::vector<Relation> out;
  auto push = [&](Relation rel) {
    for (const auto& t : rel.terms)
      if (!b.in(t.key)) return;
    out.push_back(std::move(rel));
  };
  for (int q = 0; q <= b.n; ++q)
    for (int r = 0; r <= b.n; ++r)
      for (int s = 0; s < b.s; ++s) {
        if (r % 2 == 1) {
          // theta_{0,q,r+1,s+1} = d/dlambda theta_{1,q,r,s}
          push({"r_shift", {0, q, r, s}, {{{0, q, r + 1, s + 1}, 1}, {{1, q, r, s}, -1, 0, true}}});
          // (2q+r+2) theta_{1,q,r,s+1} + 2 lambda theta_{1,q+1,r,s+1} + 2r theta_{0,q+2,r-1,s+1}
          push({"mu_balance",
                {1, q, r, s},
                {{{1, q, r, s + 1}, Rational(2 * q + r + 2)},
                 {{1, q + 1, r, s + 1}, 2, 1},
                 {{0, q + 2, r - 1, s + 1}, Rational(2 * r)}}});
        } else {
          // theta_{1,q,r+1,s+1} = d/dlambda theta_{0,q+1,r,s+1}
          push({"r_shift",
                {1, q, r, s},
                {{{1, q, r + 1, s + 1}, 1}, {{0, q + 1, r, s + 1}, -1, 0, true}}});
          Relation rel{"mu_balance",
                       {0, q, r, s},
                       {{{0, q, r, s + 1}, Rational(2 * q + r + 1)}, {{0, q + 1, r, s + 1}, 2, 1}}};
          if (r > 0) rel.terms.push_back({{1, q + 1, r - 1, s}, Rational(2 * r)});
          push(std::move(rel));
        }
      }
  return out;
}

void check_parity(const ThetaKey& k) {
  if (k.p < 0 || k.q < 0 || k.r < 0 || k.s < 0)
    fail(ErrorKind::Input, "negative theta index " + k.str());
  if ((k.p + k.r) % 2 != 0) fail(ErrorKind::Parity, "theta key " + k.str() + " has p + r odd");
}

}  // namespace

CloseResult close_table(const ThetaTable& seeds, int max_order, int max_s) {
  if (max_order < 0) fail(ErrorKind::Input, "negative max_order");
  Bounds b{max_order, max_s < 0 ? 2 * max_order + 2 : max_s};
  CloseResult res;
  res.table.max_order = max_order;
  res.table.max_s = b.s;
  auto& known = res.table.entries;

  for (const auto& [k, v] : seeds.entries) {
    check_parity(k);
    ThetaKey base = reduce_p(k);
    if (auto norm = normalization_of(base); norm && !v.is_zero())
      fail(ErrorKind::Normalization,
           "seed " + k.str() + " = " + v.str() + " breaks " + *norm);
    if (!b.in(base)) continue;
    auto [it, fresh] = known.try_emplace(base, v);
    if (!fresh && !(it->second == v))
      res.conflicts.push_back({"reduce_p", k, v - it->second});
  }
  for (int q = 0; q <= max_order; ++q)
    for (int r = 0; q + r <= max_order + 1; ++r)
      for (int s = 0; s <= b.s; ++s)
        for (int p = 0; p < 2; ++p) {
          ThetaKey k{p, q, r, s};
          if ((p + r) % 2 || !b.in(k) || !normalization_of(k)) continue;
          known.try_emplace(k, LambdaScalar{});
        }

  auto rels = base_relations(b);
  std::vector<bool> done(rels.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < rels.size(); ++i) {
      if (done[i]) continue;
      const auto& rel = rels[i];
      const Term* unknown = nullptr;
      int n_unknown = 0;
      LambdaScalar acc;
      for (const auto& t : rel.terms) {
        auto it = known.find(t.key);
        if (it == known.end()) {
          ++n_unknown;
          unknown = &t;
        } else {
          acc += apply(t, it->second);
        }
      }
      if (n_unknown == 0) {
        if (!acc.is_zero()) res.conflicts.push_back({rel.name, rel.at, acc});
        done[i] = true;
      } else if (n_unknown == 1 && !unknown->deriv) {
        known[unknown->key] = (-acc * (1 / unknown->c)).mul_lambda(-unknown->lam_e);
        done[i] = true;
        progress = true;
      }
    }
  }

  for (int p = 0; p < 2; ++p)
    for (int q = 0; q <= max_order; ++q)
      for (int r = 0; p + q + r <= max_order; ++r)
        for (int s = 0; s <= b.s; ++s) {
          ThetaKey k{p, q, r, s};
          if ((p + r) % 2 == 0 && !known.count(k)) res.underdetermined.push_back(k);
        }
  return res;
}

TableReport verify_table(const ThetaTable& t, int max_order, int max_s) {
  Bounds b{max_order, max_s < 0 ? t.s_bound() : max_s};
  TableReport rep;
  auto raw = [&](const ThetaKey& k) { return t.get(k); };
  auto flag = [&](const std::string& name, const ThetaKey& k, const LambdaScalar& res) {
    if (!res.is_zero()) rep.violations.push_back({name, k, res});
  };

  for (const auto& [k, v] : t.entries) {
    if (v.is_zero() || !b.in(k)) continue;
    if ((k.p + k.r) % 2) {
      flag("parity", k, v);
      continue;
    }
    if (auto norm = normalization_of(k)) flag(*norm, k, v);
    if (k.p >= 2) {
      auto it = t.entries.find(reduce_p(k));
      flag("reduce_p", k, v - (it == t.entries.end() ? LambdaScalar{} : it->second));
    }
  }

  for (int p = 0; p <= b.n; ++p)
    for (int q = 0; p + q <= b.n; ++q)
      for (int r = 0; p + q + r <= b.n; ++r)
        for (int s = 0; s < b.s; ++s) {
          ThetaKey k{p, q, r, s};
          if ((p + r) % 2 == 0) {
            ThetaKey a{p, q + 1, r, s + 1}, c{p + 2, q, r, s};
            if (b.in(a) && b.in(c)) flag("q_shift", k, raw(a) - raw(c));
            // (P+2Q+R+1) theta_{P,Q,R,s+1} + 2 lambda theta_{P,Q+1,R,s+1}
            //   + 2R theta_{P+1,Q+1,R-1,s} = 0
            ThetaKey m0{p, q, r, s + 1}, m1{p, q + 1, r, s + 1};
            if (b.in(m1)) {
              LambdaScalar res = raw(m0) * Rational(p + 2 * q + r + 1) + raw(m1).mul_lambda(1) * Rational(2);
              if (r > 0) {
                ThetaKey m2{p + 1, q + 1, r - 1, s};
                if (!b.in(m2)) continue;
                res += raw(m2) * Rational(2 * r);
              }
              flag("mu_balance", k, res);
            }
          } else {
            // theta_{p,q,r+1,s+1} = d/dlambda theta_{p+1,q,r,s}
            ThetaKey a{p, q, r + 1, s + 1}, c{p + 1, q, r, s};
            if (b.in(a) && b.in(c)) flag("r_shift", k, raw(a) - d_lambda(raw(c)));
          }
        }
  return rep;
}

}  // namespace c14
