#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "c14/scalar_ring.hpp"
#include "c14/symtensor.hpp"

namespace c14 {

// Deviation variables, zero-based spatial indices:
//   0..2  mu_i
//   3..8  mu_ij packed as 11,12,13,22,23,33
//   9..11 lambda_i
constexpr int kNumVars = 12;
int var_mu(int i);
int var_mat(int i, int j);
int var_lam(int i);
int packed_pair(int i, int j);

// Monomial key: 4-bit exponent per deviation variable, mu power in the top 16 bits.
using Mono = std::uint64_t;
int mono_exp(Mono m, int var);
int mono_s(Mono m);
int mono_order(Mono m);
int mono_p(Mono m);
int mono_q(Mono m);
int mono_r(Mono m);
Mono make_mono(const std::array<int, kNumVars>& exps, int s = 0);

struct Multipliers {
  Rational mu = 0;
  std::array<Rational, 3> mu_vec{0, 0, 0};
  std::array<Rational, 6> mu_mat{0, 0, 0, 0, 0, 0};
  Rational lambda = 1;
  std::array<Rational, 3> lam_vec{0, 0, 0};

  const Rational& mat(int i, int j) const { return mu_mat[packed_pair(i, j)]; }
  Rational& mat(int i, int j) { return mu_mat[packed_pair(i, j)]; }
  const Rational& var(int v) const;
  bool at_equilibrium() const;

  SymTensor mu_vec_tensor() const;
  SymTensor mu_mat_tensor() const;
  SymTensor lam_vec_tensor() const;
};

struct MuDegree {
  bool transcendental = false;
  std::optional<int> degree;  // nullopt: empty series, i.e. minus infinity
};

// Truncated polynomial in the deviation variables and mu, with LambdaScalar
// coefficients. max_order is the deviation order through which the series is
// exact; nothing above it is ever stored.
class Series {
 public:
  explicit Series(int max_order = 0) : max_order_(max_order) {}

  static Series constant(const LambdaScalar& c, int max_order);
  static Series variable(int var, int max_order);

  int max_order() const { return max_order_; }
  const std::map<Mono, LambdaScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  // Lowest order that may be nonzero.
  int valuation() const;
  bool has_psi() const;

  void add_term(Mono m, const LambdaScalar& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series operator-() const;
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const LambdaScalar& c) const;
  Series scaled(const Rational& c) const;

  Series mul_var(int var) const;
  Series mul_lambda(int e = 1) const;
  Series mul_mu(int k = 1) const;

  // Plain partial derivative in one packed component.
  Series d_var(int var) const;
  Series d_mu() const;
  Series d_lambda() const;

  Series truncated(int n) const;
  Series grade(int n) const;
  // Restriction to the hyperplane lambda_vec = 0 and/or mu_vec = 0.
  Series drop_var_family(int first_var, int count) const;

  MuDegree mu_degree() const;

  double evaluate(const Multipliers& at, const PsiRealization& real) const;
  // Sum of absolute term values, used as a residual scale.
  double evaluate_abs(const Multipliers& at, const PsiRealization& real) const;
  Rational evaluate_exact(const Multipliers& at, const PsiRealization& real) const;

  bool operator==(const Series& o) const { return terms_ == o.terms_; }

 private:
  int max_order_;
  std::map<Mono, LambdaScalar> terms_;
};

// Flattened copy of a series for repeated floating-point evaluation.
class CompiledSeries {
 public:
  explicit CompiledSeries(const Series& s);
  // Value and sum of absolute term values.
  std::pair<double, double> evaluate(const Multipliers& at, const PsiRealization& real) const;

 private:
  struct Coef {
    double c;
    int lam_exp;
    int psi;  // index into psis_, -1 for none
  };
  struct Term {
    Mono m;
    int begin, end;
  };
  std::vector<Term> terms_;
  std::vector<Coef> coefs_;
  std::vector<PsiSymbol> psis_;
  int lam_min_ = 0, lam_max_ = 0, s_max_ = 0;
};

template <class T>
struct Dense {
  int rank = 0;
  std::vector<T> v;  // 3^rank entries, lexicographic over zero-based indices
  explicit Dense(int r = 0) : rank(r), v(pow3(r), T(0)) {}
  static size_t pow3(int r) {
    size_t n = 1;
    for (int i = 0; i < r; ++i) n *= 3;
    return n;
  }
  T& at(const std::vector<int>& idx);
  const T& at(const std::vector<int>& idx) const;
};
using DenseTensor = Dense<double>;
using DenseTensorQ = Dense<Rational>;

size_t flat_index(const std::vector<int>& idx);
std::vector<int> unflatten(size_t flat, int rank);

// Series carrying `rank` free indices, one scalar series per ordered index tuple.
class TensorSeries {
 public:
  explicit TensorSeries(int rank = 0, int max_order = 0);
  static TensorSeries from_scalar(const Series& s);

  int rank() const { return rank_; }
  int max_order() const;
  Series& at(const std::vector<int>& idx) { return comps_[flat_index(idx)]; }
  const Series& at(const std::vector<int>& idx) const { return comps_[flat_index(idx)]; }
  std::vector<Series>& comps() { return comps_; }
  const std::vector<Series>& comps() const { return comps_; }
  const Series& scalar() const;

  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator-=(const TensorSeries& o);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  TensorSeries scaled(const Rational& c) const;
  TensorSeries truncated(int n) const;
  TensorSeries grade(int n) const;
  bool is_zero() const;

  DenseTensor evaluate(const Multipliers& at, const PsiRealization& real) const;
  DenseTensor evaluate_abs(const Multipliers& at, const PsiRealization& real) const;
  DenseTensorQ evaluate_exact(const Multipliers& at, const PsiRealization& real) const;

 private:
  int rank_;
  std::vector<Series> comps_;
};

enum class Var { Mu, MuVec, MuMat, Lambda, LamVec };

// Tensor-variable derivatives append free indices. For mu_ij the symmetric
// convention d(delta^{hk} mu_hk)/d mu_ij = delta^{ij} is used.
TensorSeries differentiate(const TensorSeries& s, Var v);
TensorSeries differentiate(const Series& s, Var v);

// delta^{(fixed..., i_1..i_p, h_1k_1..h_qk_q, j_1..j_r)} e_fixed... mu_i.. mu_hk.. lambda_j..
// as a polynomial with rational coefficients. Odd slot counts give a parity error.
Series delta_contraction(int p, int q, int r, const std::vector<int>& fixed, int max_order);

// Single delta-structured term coeff * mu^s * delta(...) * contractions; `free`
// open indices. No factorial normalization is applied.
TensorSeries make_delta_term(int p, int q, int r, int s, const LambdaScalar& coeff,
                             int max_order, int free = 0);

}  // namespace c14
