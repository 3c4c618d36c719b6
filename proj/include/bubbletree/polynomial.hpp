#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubbletree/laurent.hpp"
#include "bubbletree/rational.hpp"

namespace bubbletree {

// Dense univariate polynomial with big-integer coefficients, ascending
// degree, no trailing zeros (the zero polynomial is the empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> cs) {
    for (long c : cs) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { trim(); }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(const BigInt& c, int deg) {
    std::vector<BigInt> cs(static_cast<size_t>(deg + 1), BigInt(0));
    cs[static_cast<size_t>(deg)] = c;
    return IntPoly(std::move(cs));
  }
  // t^n - 1
  static IntPoly t_power_minus_one(int n) {
    std::vector<BigInt> cs(static_cast<size_t>(n + 1), BigInt(0));
    cs[0] = -1;
    cs[static_cast<size_t>(n)] = 1;
    return IntPoly(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(int d) const {
    if (d < 0 || d > degree()) return BigInt(0);
    return coeffs_[static_cast<size_t>(d)];
  }
  const BigInt& leading() const {
    if (is_zero()) throw std::domain_error("poly: leading of zero");
    return coeffs_.back();
  }

  friend IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return IntPoly(std::move(cs));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(cs));
  }
  friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
    IntPoly r = a;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
  }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<BigInt> cs(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * BigInt(i);
    return IntPoly(std::move(cs));
  }

  Rational eval(const Rational& t) const {
    Rational r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * t + Rational(coeffs_[i]);
    return r;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;  // 0 for the zero polynomial
  }

  // Multiplicity of the root t = root (0 if not a root).
  int root_multiplicity(const Rational& root) const {
    if (is_zero()) throw std::domain_error("poly: root multiplicity of zero polynomial");
    IntPoly p = *this;
    int m = 0;
    while (!p.is_zero() && p.eval(root) == 0) {
      p = p.derivative();
      ++m;
    }
    return m;
  }

  // Evaluate at a Laurent series argument (Horner).
  LaurentSeries eval_series(const LaurentSeries& s) const {
    LaurentSeries r = LaurentSeries::zero(s.var(), s.order());
    for (size_t i = coeffs_.size(); i-- > 0;) {
      r = r * s + LaurentSeries::constant(s.var(), Rational(coeffs_[i]), s.order());
    }
    return r;
  }

  // Taylor coefficients at t = 0 up to `order` (trivial for a polynomial).
  LaurentSeries taylor(const std::string& var, int order) const {
    std::vector<Rational> cs(static_cast<size_t>(order + 1), Rational(0));
    for (int d = 0; d <= std::min(order, degree()); ++d) cs[static_cast<size_t>(d)] = Rational(coeff(d));
    return LaurentSeries(var, 0, std::move(cs), order);
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
      const BigInt& c = coeff(d);
      if (c == 0) continue;
      if (!s.empty()) s += (c > 0) ? " + " : " - ";
      else if (c < 0) s += "-";
      BigInt a = boost::multiprecision::abs(c);
      if (a != 1 || d == 0) s += a.str();
      if (d >= 1) s += var;
      if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

namespace detail {

// Rational-coefficient helpers backing exact division and gcd.
using RatPoly = std::vector<Rational>;  // ascending, trailing zeros trimmed

inline void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

// Division with remainder over Q.
inline void rp_divmod(RatPoly a, const RatPoly& b, RatPoly& quo, RatPoly& rem) {
  if (b.empty()) throw std::domain_error("poly: division by zero");
  quo.assign(a.size(), Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    quo[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    rp_trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) rp_trim(a);
  }
  rp_trim(quo);
  rem = std::move(a);
}

// Primitive integer polynomial with positive leading coefficient from a
// rational-coefficient one.
inline IntPoly rp_to_primitive(const RatPoly& p) {
  if (p.empty()) return IntPoly();
  BigInt lcm = 1;
  for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> cs;
  for (const auto& c : p) {
    Rational scaled = c * Rational(lcm);
    cs.push_back(numerator(scaled));
  }
  IntPoly q{std::move(cs)};
  BigInt g = q.content();
  if (g == 0) return IntPoly();
  if (q.leading() < 0) g = -g;
  std::vector<BigInt> out;
  for (const auto& c : q.coefficients()) out.push_back(c / g);
  return IntPoly(std::move(out));
}

}  // namespace detail

// Monic-Euclid gcd over Q, returned as a primitive integer polynomial with
// positive leading coefficient.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  detail::RatPoly x = detail::rp_from(a), y = detail::rp_from(b);
  while (!y.empty()) {
    detail::RatPoly q, r;
    detail::rp_divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return IntPoly();
  return detail::rp_to_primitive(x);
}

// Exact quotient; throws if the division leaves a remainder or the quotient
// is not integral.
inline IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b) {
  detail::RatPoly quo, rem;
  detail::rp_divmod(detail::rp_from(a), detail::rp_from(b), quo, rem);
  if (!rem.empty()) throw std::domain_error("poly: inexact division");
  std::vector<BigInt> cs;
  for (const auto& c : quo) {
    if (denominator(c) != 1) throw std::domain_error("poly: non-integer exact quotient");
    cs.push_back(numerator(c));
  }
  return IntPoly(std::move(cs));
}

}  // namespace bubbletree
