#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "c14/rational.hpp"

namespace c14 {

// psi_n^{(k)}: k-th lambda-derivative of the n-th mu-antiderivative of the
// equilibrium potential. n may be negative (mu-derivatives of psi_0).
struct PsiSymbol {
  int n = 0;
  int k = 0;
  auto operator<=>(const PsiSymbol&) const = default;
};

struct LamMono {
  std::optional<PsiSymbol> psi;
  int lam_exp = 0;
  auto operator<=>(const LamMono&) const = default;
};

// Laurent polynomial in lambda with rational coefficients, each monomial
// optionally carrying one psi symbol. Zero coefficients are never stored.
class LambdaScalar {
 public:
  LambdaScalar() = default;
  LambdaScalar(const Rational& c);  // NOLINT(implicit)
  LambdaScalar(long c) : LambdaScalar(Rational(c)) {}  // NOLINT(implicit)

  static LambdaScalar lambda_pow(int e, const Rational& c = 1);
  static LambdaScalar psi(int n, int k = 0, int lam_exp = 0, const Rational& c = 1);

  const std::map<LamMono, Rational>& monomials() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  bool has_psi() const;
  // Constant term when the scalar is a pure rational.
  std::optional<Rational> as_rational() const;
  int min_lambda_exp() const;

  void add_monomial(const LamMono& mono, const Rational& c);

  LambdaScalar& operator+=(const LambdaScalar& o);
  LambdaScalar& operator-=(const LambdaScalar& o);
  LambdaScalar& operator*=(const Rational& c);
  LambdaScalar operator-() const;
  friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
  friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar& b) { return a -= b; }
  friend LambdaScalar operator*(LambdaScalar a, const Rational& c) { return a *= c; }
  friend LambdaScalar operator*(const Rational& c, LambdaScalar a) { return a *= c; }
  // Throws PsiProduct when both sides carry psi.
  friend LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b);
  LambdaScalar mul_lambda(int e) const;
  bool operator==(const LambdaScalar& o) const { return m_ == o.m_; }

  std::string str() const;

 private:
  std::map<LamMono, Rational> m_;
};

LambdaScalar d_lambda(const LambdaScalar& x);
LambdaScalar d_mu(const LambdaScalar& x);

// Numeric model of the psi family.
class PsiRealization {
 public:
  virtual ~PsiRealization() = default;
  virtual std::string name() const = 0;
  virtual double value(int n, int k, double mu, double lam) const = 0;
  // Exact value at rational arguments, when the family allows it.
  virtual std::optional<Rational> exact(int n, int k, const Rational& mu,
                                        const Rational& lam) const = 0;
};

// psi_n^{(k)} = e^mu g^{(k)}(lambda), g = lambda; valid for every integer n.
class ExpFamily : public PsiRealization {
 public:
  std::string name() const override { return "exp"; }
  double value(int n, int k, double mu, double lam) const override;
  std::optional<Rational> exact(int, int, const Rational&, const Rational&) const override {
    return std::nullopt;
  }
};

// psi_n^{(k)} = mu^{n+2}/(n+2)! g^{(k)}(lambda) for n >= -2, zero below.
class PolyFamily : public PsiRealization {
 public:
  std::string name() const override { return "poly"; }
  double value(int n, int k, double mu, double lam) const override;
  std::optional<Rational> exact(int n, int k, const Rational& mu,
                                const Rational& lam) const override;
};

std::unique_ptr<PsiRealization> make_realization(const std::string& name);

double eval_scalar(const LambdaScalar& x, double mu, double lam, const PsiRealization& real);
Rational eval_scalar_exact(const LambdaScalar& x, const Rational& mu, const Rational& lam,
                           const PsiRealization& real);

}  // namespace c14
