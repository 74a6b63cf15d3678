#include "c14/rational.hpp"

#include <cctype>

namespace c14 {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRank: return "invalid-rank error";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::Pole: return "pole error";
    case ErrorKind::Parity: return "parity error";
    case ErrorKind::PsiProduct: return "psi-product error";
    case ErrorKind::Headroom: return "headroom error";
    case ErrorKind::Normalization: return "normalization error";
    case ErrorKind::Grid: return "grid error";
    case ErrorKind::Input: return "input error";
  }
  return "error";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Rational rat(long num, long den) {
  if (den == 0) fail(ErrorKind::Input, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {
bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_int(const std::string& s) {
  if (!is_integer_literal(s)) fail(ErrorKind::Input, "not an integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}
}  // namespace

Rational parse_rational(const std::string& num, const std::string& den) {
  mpz_class n = parse_int(num), d = parse_int(den);
  if (d == 0) fail(ErrorKind::Input, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) return parse_rational(text.substr(0, slash), text.substr(slash + 1));
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text, "1");
  std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
  if (fp.empty() || !is_integer_literal(fp) || fp[0] == '-' || fp[0] == '+')
    fail(ErrorKind::Input, "bad decimal: '" + text + "'");
  bool neg = !ip.empty() && ip[0] == '-';
  if (ip.empty() || ip == "-" || ip == "+") ip += "0";
  mpz_class scale = 1;
  for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
  mpz_class whole = parse_int(ip);
  if (whole < 0) whole = -whole;
  mpz_class n = whole * scale + mpz_class(fp, 10);
  if (neg) n = -n;
  Rational r(n, scale);
  r.canonicalize();
  return r;
}

std::string num_str(const Rational& x) { return x.get_num().get_str(); }
std::string den_str(const Rational& x) { return x.get_den().get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return num_str(x);
  return num_str(x) + "/" + den_str(x);
}

double to_double(const Rational& x) { return x.get_d(); }

Rational factorial(int n) {
  if (n < 0) fail(ErrorKind::Input, "negative factorial");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational double_factorial(int n) {
  if (n < -1) fail(ErrorKind::Input, "double factorial below -1");
  mpz_class f = 1;
  for (int k = n; k > 1; k -= 2) f *= k;
  return Rational(f);
}

Rational pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) fail(ErrorKind::Pole, "zero to a negative power");
    return pow(1 / x, -e);
  }
  Rational r = 1, b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace c14
