#pragma once

#include <map>
#include <vector>

#include "c14/rational.hpp"

namespace c14 {

// Sorted index tuple over {1,2,3}.
using MultiIndex = std::vector<int>;

enum class ScalarMode { Rational, Float };

// Fully symmetric rank-k tensor in three dimensions. Only the canonical
// (sorted) key of each symmetry class is stored; absent keys read as zero.
class SymTensor {
 public:
  explicit SymTensor(int rank = 0, ScalarMode mode = ScalarMode::Rational);
  static SymTensor scalar(const Rational& v);
  static SymTensor vector(const Rational& a, const Rational& b, const Rational& c);
  // Symmetric 3x3 matrix from its six packed entries (11,12,13,22,23,33).
  static SymTensor matrix(const Rational& m11, const Rational& m12, const Rational& m13,
                          const Rational& m22, const Rational& m23, const Rational& m33);

  int rank() const { return rank_; }
  ScalarMode mode() const { return mode_; }

  // Unsorted lookups are fine; the key is canonicalized first.
  Rational get(MultiIndex idx) const;
  double get_float(MultiIndex idx) const;
  void set(MultiIndex idx, const Rational& v);
  void set_float(MultiIndex idx, double v);

  const std::map<MultiIndex, Rational>& components() const { return rat_; }
  const std::map<MultiIndex, double>& float_components() const { return flt_; }

  SymTensor to_float() const;
  bool operator==(const SymTensor& o) const;

 private:
  MultiIndex canonical(MultiIndex idx) const;

  int rank_;
  ScalarMode mode_;
  std::map<MultiIndex, Rational> rat_;
  std::map<MultiIndex, double> flt_;
};

// All sorted multi-indices of the given rank, lexicographic.
std::vector<MultiIndex> sorted_indices(int rank);

SymTensor sym_delta(int n);

using RawTable = std::map<std::vector<int>, Rational>;
SymTensor symmetrize(const RawTable& raw, int rank);
SymTensor symmetrize(const SymTensor& t);

// A contraction argument: a vector uses one slot, a symmetric matrix two.
struct ContractArg {
  SymTensor value;
  static ContractArg vec(const SymTensor& v);
  static ContractArg mat(const SymTensor& m);
};

SymTensor contract(const SymTensor& t, const std::vector<ContractArg>& args);
SymTensor outer(const SymTensor& a, const SymTensor& b);

}  // namespace c14
