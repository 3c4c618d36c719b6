#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bubbletree {

// All arithmetic in the library is exact. Rational is kept in lowest terms
// with a positive denominator by the multiprecision backend.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("pow_rational: 0 to negative power");
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational r(pow_int(numerator(base), e), pow_int(denominator(base), e));
  if (exp < 0) r = Rational(1) / r;
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// binom(n, k) for integer n (possibly negative via the falling-factorial rule).
inline BigInt binomial(const BigInt& n, unsigned k) {
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= (n - i);
  Rational q(num, factorial(k));
  if (denominator(q) != 1) throw std::logic_error("binomial: not an integer");
  return numerator(q);
}

inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + std::string(s) + "'");
  }
}

}  // namespace bubbletree
