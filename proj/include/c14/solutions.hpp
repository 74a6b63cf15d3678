#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c14/recurrence.hpp"
#include "c14/series.hpp"

namespace c14 {

// Polynomial in the invariants (G0, G1, G2), standing in for the arbitrary F.
struct PolyF {
  std::map<std::array<int, 3>, Rational> coeffs;  // exponents of G0, G1, G2

  static PolyF zero() { return {}; }
  static PolyF monomial(int a, int b, int c, const Rational& k = 1);
  static PolyF named(const std::string& name);  // "0", "G1", "G1^2", "G2"
  bool is_zero() const { return coeffs.empty(); }
  // Partial derivative in G_v, v in {0,1,2}.
  PolyF partial(int v) const;
  std::string str() const;
};

// Scalar invariants as series, truncated at max_order.
struct Invariants {
  Series G0, G1, G2;
  Series mll;   // mu_bc lambda^b lambda^c
  Series tr;    // delta^bc mu_bc
  Series mumu;  // mu_bc mu_bc
  Series mml;   // mu_bd mu_dc lambda^b lambda^c
  std::array<Series, 3> Ml;   // mu_kd lambda_d
  std::array<Series, 3> MMl;  // mu_kc mu_cb lambda_b
  std::array<Series, 3> lam;
  explicit Invariants(int max_order);
};

Series poly_series(const PolyF& f, const Invariants& inv);

struct SolutionParams {
  ThetaTable theta;
  std::map<int, Rational> beta;       // r >= 1
  std::map<int, Rational> psi_const;  // r even
  PolyF F;
  Series ttH0;  // function of (mu_ab, lambda, lambda_c) only
  // Forces an r = 0 beta term into the vector-potential construction. Only used
  // to exhibit the obstruction; admissible parameter sets leave it empty.
  std::optional<Rational> beta0_injection;

  void validate() const;
};

// Each builder returns a series exact through max_order + 2.
Series build_H1(int max_order);
Series build_Hstar0(const SolutionParams& params, int max_order);
TensorSeries build_ttHk(const SolutionParams& params, int max_order);
Series build_DeltaH(const SolutionParams& params, int max_order);

// Residual terms of one condition; the residual is their sum.
struct ConditionTerms {
  std::string name;
  std::vector<TensorSeries> terms;
};

enum class ConditionSet { Core, HStar0, Vector, Galilean };
ConditionSet parse_condition_set(const std::string& name);
std::string condition_set_name(ConditionSet c);

std::vector<ConditionTerms> core_conditions(const Series& H, int order);
std::vector<ConditionTerms> galilean_conditions(const Series& H, int order);
std::vector<ConditionTerms> hstar0_conditions(const Series& Hstar, const ThetaTable& theta,
                                              int order);
std::vector<ConditionTerms> vector_conditions(const Series& Hstar, const TensorSeries& ttHk,
                                              int order);

struct VerifyOptions {
  int order = 4;
  int points = 100;
  double tol = 1e-9;
  std::uint64_t rng_seed = 1;
  std::string family = "exp";
  // Extra exact evaluation at rational points with the polynomial psi family.
  int rational_points = 0;
};

struct ConditionReport {
  std::string condition;
  int order = 0;
  double max_residual = 0;
  Multipliers worst_point;
  bool symbolic_zero = false;
  std::optional<bool> rational_zero;
  bool pass = false;
};

struct VerifyReport {
  std::vector<ConditionReport> conditions;
  bool pass() const;
};

// Random multipliers: lambda in [1,2], deviations in [-0.1,0.1], mu in [-1,1].
std::vector<Multipliers> sample_points(int count, std::uint64_t seed);

VerifyReport verify_conditions(const std::vector<ConditionTerms>& conds,
                               const VerifyOptions& opts);

// For HStar0 `S` is H*0; for Vector `S` is H*0 and `ttHk` is required.
VerifyReport verify_potential(const Series& S, ConditionSet set, const VerifyOptions& opts,
                              const ThetaTable* theta = nullptr,
                              const TensorSeries* ttHk = nullptr);

void require_headroom(int series_order, int order);

}  // namespace c14
