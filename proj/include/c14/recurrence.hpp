#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "c14/scalar_ring.hpp"

namespace c14 {

struct ThetaKey {
  int p = 0, q = 0, r = 0, s = 0;
  auto operator<=>(const ThetaKey&) const = default;
  int order() const { return p + q + r; }
  std::string str() const;
};

// Even p folds onto p = 0, odd p onto p = 1, trading p/2 into q and s.
ThetaKey reduce_p(const ThetaKey& k);

// Coefficients theta_{p,q,r,s}(lambda) of the symmetric expansion of dDeltaH/dmu.
// Keys with p + q + r <= max_order and s <= max_s are in scope; a missing key
// reads as zero.
struct ThetaTable {
  std::map<ThetaKey, LambdaScalar> entries;
  int max_order = 0;
  int max_s = -1;  // negative: 2 * max_order + 2

  int s_bound() const { return max_s < 0 ? 2 * max_order + 2 : max_s; }
  // Stored value, falling back to the reduced key for p >= 2.
  LambdaScalar get(const ThetaKey& k) const;
  void set(const ThetaKey& k, const LambdaScalar& v) { entries[k] = v; }
};

struct TableViolation {
  std::string relation;  // q_shift, r_shift, mu_balance, reduce_p, parity, norm_*
  ThetaKey key;
  LambdaScalar residual;
};

struct TableReport {
  std::vector<TableViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& relation) const;
};

struct CloseResult {
  ThetaTable table;  // every determined base key (p in {0,1}) is stored, zeros included
  std::vector<TableViolation> conflicts;
  std::vector<ThetaKey> underdetermined;
  bool consistent() const { return conflicts.empty(); }
};

// Propagates seeds through the r-shift and mu-balance relations restricted to
// p in {0,1}. Seeds breaking parity or a normalization throw.
CloseResult close_table(const ThetaTable& seeds, int max_order, int max_s = -1);

TableReport verify_table(const ThetaTable& t, int max_order, int max_s = -1);

}  // namespace c14
