#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace c14 {

using Rational = mpq_class;

enum class ErrorKind {
  InvalidRank,
  Shape,
  Pole,
  Parity,
  PsiProduct,
  Headroom,
  Normalization,
  Grid,
  Input,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

Rational rat(long num, long den = 1);
// Decimal strings, sign on the numerator. Throws Input on garbage or zero denominator.
Rational parse_rational(const std::string& num, const std::string& den);
// Accepts "a", "a/b" or a decimal literal like "0.25".
Rational parse_rational(const std::string& text);
std::string num_str(const Rational& x);
std::string den_str(const Rational& x);
std::string to_string(const Rational& x);
double to_double(const Rational& x);

Rational factorial(int n);
// (2m+1)!! style product; (-1)!! = 0!! = 1.
Rational double_factorial(int n);
Rational pow(const Rational& x, int e);

}  // namespace c14
