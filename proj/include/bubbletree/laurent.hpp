#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubbletree/rational.hpp"

namespace bubbletree {

// Truncated Laurent series: coefficients for exponents min_exp..order are
// known exactly, everything above `order` is unknown. Binary operations
// propagate the validity order of their operands. A series that is zero on
// its whole validity range is stored with min_exp = order + 1 and no
// coefficients.
class LaurentSeries {
 public:
  LaurentSeries() : var_("x"), min_exp_(1), order_(0) {}

  LaurentSeries(std::string var, int min_exp, std::vector<Rational> coeffs, int order)
      : var_(std::move(var)), min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order_ - min_exp_ + 1)
      throw std::invalid_argument("laurent: coefficient count does not match exponent range");
    normalize();
  }

  static LaurentSeries zero(const std::string& var, int order) {
    return LaurentSeries(var, order + 1, {}, order);
  }

  static LaurentSeries monomial(const std::string& var, const Rational& c, int exp, int order) {
    if (exp > order) return zero(var, order);
    std::vector<Rational> cs(static_cast<size_t>(order - exp + 1), Rational(0));
    cs[0] = c;
    return LaurentSeries(var, exp, std::move(cs), order);
  }

  static LaurentSeries constant(const std::string& var, const Rational& c, int order) {
    return monomial(var, c, 0, order);
  }

  // e^x up to `order`.
  static LaurentSeries exponential(const std::string& var, int order) {
    std::vector<Rational> cs;
    Rational c(1);
    for (int k = 0; k <= order; ++k) {
      cs.push_back(c);
      c /= (k + 1);
    }
    return LaurentSeries(var, 0, std::move(cs), order);
  }

  const std::string& var() const { return var_; }
  int min_exp() const { return min_exp_; }
  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int exp) const {
    if (exp > order_)
      throw std::out_of_range("laurent: coefficient requested beyond truncation order");
    if (exp < min_exp_ || coeffs_.empty()) return Rational(0);
    return coeffs_[static_cast<size_t>(exp - min_exp_)];
  }

  LaurentSeries truncated(int new_order) const {
    if (new_order >= order_) return *this;
    if (new_order < min_exp_) return zero(var_, new_order);
    std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + (new_order - min_exp_ + 1));
    return LaurentSeries(var_, min_exp_, std::move(cs), new_order);
  }

  friend LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_var(b);
    int order = std::min(a.order_, b.order_);
    int lo = std::min(a.min_exp_, b.min_exp_);
    if (lo > order) return zero(a.var_, order);
    std::vector<Rational> cs(static_cast<size_t>(order - lo + 1), Rational(0));
    for (int e = lo; e <= order; ++e) {
      Rational c(0);
      if (e >= a.min_exp_ && e <= a.order_ && !a.coeffs_.empty() && e - a.min_exp_ < (int)a.coeffs_.size())
        c += a.coeffs_[static_cast<size_t>(e - a.min_exp_)];
      if (e >= b.min_exp_ && e <= b.order_ && !b.coeffs_.empty() && e - b.min_exp_ < (int)b.coeffs_.size())
        c += b.coeffs_[static_cast<size_t>(e - b.min_exp_)];
      cs[static_cast<size_t>(e - lo)] = c;
    }
    return LaurentSeries(a.var_, lo, std::move(cs), order);
  }

  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const Rational& s) {
    if (s == 0) return zero(a.var_, a.order_);
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a) { return a * s; }

  // Validity of a product: each factor is exact on [min_exp, order], so the
  // product is trustworthy up to min(a.order + b.val, b.order + a.val).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_var(b);
    int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    if (a.is_zero() || b.is_zero()) return zero(a.var_, order);
    int lo = a.min_exp_ + b.min_exp_;
    if (lo > order) return zero(a.var_, order);
    std::vector<Rational> cs(static_cast<size_t>(order - lo + 1), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        int e = a.min_exp_ + static_cast<int>(i) + b.min_exp_ + static_cast<int>(j);
        if (e > order) break;
        cs[static_cast<size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(a.var_, lo, std::move(cs), order);
  }

  // Multiplicative inverse; the leading coefficient must be nonzero.
  // Valid to order `order - 2*valuation`.
  LaurentSeries inverse() const {
    if (is_zero()) throw std::domain_error("laurent: inverse of zero series");
    int v = min_exp_;
    int rel = order_ - v;  // relative order of the unit part
    const Rational& lead = coeffs_[0];
    // u = series / (lead * x^v), u = 1 + ...; invert by the standard recursion.
    std::vector<Rational> u(coeffs_.begin(), coeffs_.end());
    for (auto& c : u) c /= lead;
    std::vector<Rational> w(static_cast<size_t>(rel + 1), Rational(0));
    w[0] = 1;
    for (int n = 1; n <= rel; ++n) {
      Rational s(0);
      for (int k = 1; k <= n; ++k)
        if (k < (int)u.size()) s += u[static_cast<size_t>(k)] * w[static_cast<size_t>(n - k)];
      w[static_cast<size_t>(n)] = -s;
    }
    for (auto& c : w) c /= lead;
    return LaurentSeries(var_, -v, std::move(w), -v + rel).truncated(order_ - 2 * v);
  }

  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inverse();
  }

  // log(1 + u); requires constant term 1 and no pole.
  LaurentSeries log() const {
    if (valuation() < 0 || coeff_or_zero(0) != 1)
      throw std::domain_error("laurent: log requires constant term 1");
    int n = order_;
    std::vector<Rational> u(static_cast<size_t>(n + 1), Rational(0));
    for (int e = std::max(0, min_exp_); e <= n; ++e) u[static_cast<size_t>(e)] = coeff(e);
    // l' (1+v) = u' with u = 1 + v: n*l_n = n*v_n - sum_{k=1}^{n-1} k*l_k*v_{n-k}
    std::vector<Rational> l(static_cast<size_t>(n + 1), Rational(0));
    for (int m = 1; m <= n; ++m) {
      Rational s = u[static_cast<size_t>(m)] * m;
      for (int k = 1; k < m; ++k)
        s -= Rational(k) * l[static_cast<size_t>(k)] * u[static_cast<size_t>(m - k)];
      l[static_cast<size_t>(m)] = s / m;
    }
    l[0] = 0;
    return LaurentSeries(var_, 0, std::move(l), n);
  }

  // exp(u); requires valuation >= 1.
  LaurentSeries exp() const {
    if (!is_zero() && valuation() < 1)
      throw std::domain_error("laurent: exp requires positive valuation");
    int n = order_;
    std::vector<Rational> u(static_cast<size_t>(n + 1), Rational(0));
    for (int e = std::max(1, min_exp_); e <= n; ++e)
      if (e >= min_exp_) u[static_cast<size_t>(e)] = coeff(e);
    std::vector<Rational> g(static_cast<size_t>(n + 1), Rational(0));
    g[0] = 1;
    for (int m = 1; m <= n; ++m) {
      Rational s(0);
      for (int k = 1; k <= m; ++k)
        s += Rational(k) * u[static_cast<size_t>(k)] * g[static_cast<size_t>(m - k)];
      g[static_cast<size_t>(m)] = s / m;
    }
    return LaurentSeries(var_, 0, std::move(g), n);
  }

  // d/dx. One order of validity is lost.
  LaurentSeries derivative() const {
    if (is_zero()) return zero(var_, order_ - 1);
    std::vector<Rational> out(static_cast<size_t>(order_ - min_exp_ + 1), Rational(0));
    for (int e = min_exp_; e <= order_; ++e)
      if (e != 0) out[static_cast<size_t>(e - min_exp_)] = coeff(e) * e;
    return LaurentSeries(var_, min_exp_ - 1, std::move(out), order_ - 1);
  }

  // x -> s*x: coefficient of x^k picks up s^k.
  LaurentSeries scale_variable(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("laurent: scale by zero");
    LaurentSeries r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] *= pow_rational(s, r.min_exp_ + static_cast<int>(i));
    r.normalize();
    return r;
  }

  LaurentSeries with_var(const std::string& var) const {
    LaurentSeries r = *this;
    r.var_ = var;
    return r;
  }

  bool operator==(const LaurentSeries& o) const {
    return var_ == o.var_ && min_exp_ == o.min_exp_ && order_ == o.order_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // Coefficientwise agreement on exponents <= through (must be within both
  // validity ranges).
  friend bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int through) {
    if (through > a.order() || through > b.order())
      throw std::out_of_range("agree_through: beyond validity of an operand");
    int lo = std::min(a.min_exp(), b.min_exp());
    for (int e = lo; e <= through; ++e)
      if (a.coeff(e) != b.coeff(e)) return false;
    return true;
  }

  std::string str() const {
    if (is_zero()) return "0 + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
    std::string s;
    for (int e = min_exp_; e <= order_; ++e) {
      Rational c = coeff(e);
      if (c == 0) continue;
      if (!s.empty()) s += " + ";
      s += to_fraction_string(c) + "*" + var_ + "^" + std::to_string(e);
    }
    s += " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
    return s;
  }

 private:
  void check_var(const LaurentSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("laurent: variable mismatch " + var_ + " vs " + o.var_);
  }

  int valuation() const { return min_exp_; }  // for the zero series this is order+1

  Rational coeff_or_zero(int exp) const {
    if (exp < min_exp_ || exp > order_ || coeffs_.empty()) return Rational(0);
    return coeffs_[static_cast<size_t>(exp - min_exp_)];
  }

  void normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = order_ + 1;
    } else if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      min_exp_ += static_cast<int>(lead);
    }
  }

  std::string var_;
  int min_exp_;
  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace bubbletree
