#include "c14/scalar_ring.hpp"

#include <cmath>
#include <sstream>

namespace c14 {

LambdaScalar::LambdaScalar(const Rational& c) {
  if (c != 0) m_[LamMono{}] = c;
}

LambdaScalar LambdaScalar::lambda_pow(int e, const Rational& c) {
  LambdaScalar s;
  s.add_monomial(LamMono{std::nullopt, e}, c);
  return s;
}

LambdaScalar LambdaScalar::psi(int n, int k, int lam_exp, const Rational& c) {
  if (k < 0) fail(ErrorKind::Input, "negative psi derivative order");
  LambdaScalar s;
  s.add_monomial(LamMono{PsiSymbol{n, k}, lam_exp}, c);
  return s;
}

bool LambdaScalar::has_psi() const {
  for (const auto& [mono, c] : m_)
    if (mono.psi) return true;
  return false;
}

std::optional<Rational> LambdaScalar::as_rational() const {
  if (m_.empty()) return Rational(0);
  if (m_.size() == 1 && !m_.begin()->first.psi && m_.begin()->first.lam_exp == 0)
    return m_.begin()->second;
  return std::nullopt;
}

int LambdaScalar::min_lambda_exp() const {
  int e = 0;
  for (const auto& [mono, c] : m_) e = std::min(e, mono.lam_exp);
  return e;
}

void LambdaScalar::add_monomial(const LamMono& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m_.try_emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m_.erase(it);
  }
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
  for (const auto& [mono, c] : o.m_) add_monomial(mono, c);
  return *this;
}

LambdaScalar& LambdaScalar::operator-=(const LambdaScalar& o) {
  for (const auto& [mono, c] : o.m_) add_monomial(mono, -c);
  return *this;
}

LambdaScalar& LambdaScalar::operator*=(const Rational& c) {
  if (c == 0) {
    m_.clear();
    return *this;
  }
  for (auto& [mono, v] : m_) v *= c;
  return *this;
}

LambdaScalar LambdaScalar::operator-() const {
  LambdaScalar r = *this;
  r *= -1;
  return r;
}

LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b) {
  LambdaScalar r;
  for (const auto& [ma, ca] : a.m_)
    for (const auto& [mb, cb] : b.m_) {
      if (ma.psi && mb.psi) fail(ErrorKind::PsiProduct, "product of two psi symbols");
      LamMono m{ma.psi ? ma.psi : mb.psi, ma.lam_exp + mb.lam_exp};
      r.add_monomial(m, ca * cb);
    }
  return r;
}

LambdaScalar LambdaScalar::mul_lambda(int e) const {
  LambdaScalar r;
  for (const auto& [mono, c] : m_) r.m_.emplace(LamMono{mono.psi, mono.lam_exp + e}, c);
  return r;
}

std::string LambdaScalar::str() const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : m_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (mono.lam_exp != 0) os << "*lam^" << mono.lam_exp;
    if (mono.psi) os << "*psi[" << mono.psi->n << "," << mono.psi->k << "]";
  }
  return os.str();
}

LambdaScalar d_lambda(const LambdaScalar& x) {
  LambdaScalar r;
  for (const auto& [mono, c] : x.monomials()) {
    if (mono.lam_exp != 0) r.add_monomial(LamMono{mono.psi, mono.lam_exp - 1}, c * mono.lam_exp);
    if (mono.psi)
      r.add_monomial(LamMono{PsiSymbol{mono.psi->n, mono.psi->k + 1}, mono.lam_exp}, c);
  }
  return r;
}

LambdaScalar d_mu(const LambdaScalar& x) {
  LambdaScalar r;
  for (const auto& [mono, c] : x.monomials())
    if (mono.psi) r.add_monomial(LamMono{PsiSymbol{mono.psi->n - 1, mono.psi->k}, mono.lam_exp}, c);
  return r;
}

double ExpFamily::value(int, int k, double mu, double lam) const {
  double g = k == 0 ? lam : (k == 1 ? 1.0 : 0.0);
  return std::exp(mu) * g;
}

double PolyFamily::value(int n, int k, double mu, double lam) const {
  if (n < -2) return 0.0;
  double g = k == 0 ? lam : (k == 1 ? 1.0 : 0.0);
  return std::pow(mu, n + 2) / std::tgamma(n + 3.0) * g;
}

std::optional<Rational> PolyFamily::exact(int n, int k, const Rational& mu,
                                          const Rational& lam) const {
  if (n < -2) return Rational(0);
  Rational g = k == 0 ? lam : (k == 1 ? Rational(1) : Rational(0));
  return pow(mu, n + 2) / factorial(n + 2) * g;
}

std::unique_ptr<PsiRealization> make_realization(const std::string& name) {
  if (name == "exp") return std::make_unique<ExpFamily>();
  if (name == "poly") return std::make_unique<PolyFamily>();
  fail(ErrorKind::Input, "unknown psi family '" + name + "'");
}

double eval_scalar(const LambdaScalar& x, double mu, double lam, const PsiRealization& real) {
  double acc = 0;
  for (const auto& [mono, c] : x.monomials()) {
    if (mono.lam_exp < 0 && lam == 0.0) fail(ErrorKind::Pole, "lambda = 0 with a negative power");
    double v = c.get_d() * std::pow(lam, mono.lam_exp);
    if (mono.psi) v *= real.value(mono.psi->n, mono.psi->k, mu, lam);
    acc += v;
  }
  return acc;
}

Rational eval_scalar_exact(const LambdaScalar& x, const Rational& mu, const Rational& lam,
                           const PsiRealization& real) {
  Rational acc = 0;
  for (const auto& [mono, c] : x.monomials()) {
    if (mono.lam_exp < 0 && lam == 0) fail(ErrorKind::Pole, "lambda = 0 with a negative power");
    Rational v = c * pow(lam, mono.lam_exp);
    if (mono.psi) {
      auto p = real.exact(mono.psi->n, mono.psi->k, mu, lam);
      if (!p) fail(ErrorKind::Input, "psi family '" + real.name() + "' has no exact mode");
      v *= *p;
    }
    acc += v;
  }
  return acc;
}

}  // namespace c14
