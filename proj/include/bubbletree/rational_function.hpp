#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bubbletree/laurent.hpp"
#include "bubbletree/polynomial.hpp"

namespace bubbletree {

// Ratio of integer polynomials in t, kept canonical: numerator and
// denominator coprime, denominator with positive leading coefficient, and
// the gcd of all integer coefficients across both equal to 1. Equality of
// values is equality of representations.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_{1} {}
  RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("ratfun: zero denominator");
    canonicalize();
  }
  static RationalFunction from_poly(IntPoly p) { return RationalFunction(std::move(p), IntPoly{1}); }
  static RationalFunction constant(long c) { return from_poly(IntPoly{c}); }
  static RationalFunction t() { return from_poly(IntPoly{0, 1}); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("ratfun: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
    return a * RationalFunction(IntPoly::constant(numerator(s)), IntPoly::constant(denominator(s)));
  }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  Rational eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d == 0) throw std::domain_error("ratfun: evaluation at a pole");
    return num_.eval(at) / d;
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // Pole order at t = root; negative values mean a zero of that order.
  int pole_order(const Rational& at) const {
    if (is_zero()) return 0;
    return den_.root_multiplicity(at) - num_.root_multiplicity(at);
  }

  // Taylor expansion at t = 0 to `order`; requires no pole at 0.
  LaurentSeries taylor_at_zero(const std::string& var, int order) const {
    if (den_.eval(Rational(0)) == 0)
      throw std::domain_error("ratfun: pole at t = 0");
    LaurentSeries n = num_.taylor(var, order);
    LaurentSeries d = den_.taylor(var, order);
    return n * d.inverse();
  }

  std::string str() const {
    if (is_polynomial()) {
      std::string s = num_.str();
      if (den_.leading() != 1) s = "(" + s + ")/" + den_.str();
      return s;
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = IntPoly{1};
      return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_divide_exact(num_, g);
      den_ = poly_divide_exact(den_, g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c > 1) {
      std::vector<BigInt> ncs, dcs;
      for (const auto& x : num_.coefficients()) ncs.push_back(x / c);
      for (const auto& x : den_.coefficients()) dcs.push_back(x / c);
      num_ = IntPoly(std::move(ncs));
      den_ = IntPoly(std::move(dcs));
    }
  }

  IntPoly num_, den_;
};

// D g = t g'(t). Applied k times.
inline RationalFunction apply_D(const RationalFunction& g, int times) {
  if (times < 0) throw std::invalid_argument("apply_D: negative iteration count");
  RationalFunction r = g;
  for (int i = 0; i < times; ++i) r = RationalFunction(IntPoly{0, 1}, IntPoly{1}) * r.derivative();
  return r;
}

}  // namespace bubbletree
