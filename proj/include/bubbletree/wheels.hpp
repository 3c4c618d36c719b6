#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "bubbletree/laurent.hpp"
#include "bubbletree/rational_function.hpp"

namespace bubbletree {

// The wheel generating series f(x) = (1/2) log(sinh(x/2)/(x/2)), scaled to
// f(n x) and truncated at `order`. Only even exponents >= 2 occur.
inline LaurentSeries series_f(int scale, int order, const std::string& var = "x") {
  if (scale < 1) throw std::invalid_argument("series_f: scale must be a positive integer");
  if (order < 0) throw std::invalid_argument("series_f: negative order");
  // sinh(x/2)/(x/2) = sum_k x^(2k) / (4^k (2k+1)!)
  std::vector<Rational> cs(static_cast<size_t>(order + 1), Rational(0));
  for (int k = 0; 2 * k <= order; ++k)
    cs[static_cast<size_t>(2 * k)] = Rational(1, pow_int(4, static_cast<unsigned long>(k)) *
                                                     factorial(static_cast<unsigned>(2 * k + 1)));
  LaurentSeries s(var, 0, std::move(cs), order);
  LaurentSeries f = s.log() * Rational(1, 2);
  if (scale == 1) return f;
  return f.scale_variable(Rational(scale));
}

// h(t^n) = (t^n + 1)/(t^n - 1) in canonical form.
inline RationalFunction h_function(int scale) {
  if (scale < 1) throw std::invalid_argument("h_function: scale must be a positive integer");
  IntPoly num = IntPoly::t_power_minus_one(scale) + IntPoly{2};  // t^n + 1
  return RationalFunction(num, IntPoly::t_power_minus_one(scale));
}

// Laurent expansion of g(e^x) around x = 0 to `order`. The pole order in x
// equals the pole order of g at t = 1 and must not exceed `max_pole`.
inline LaurentSeries hair_expand(const RationalFunction& g, int order, int max_pole = 8,
                                 const std::string& var = "x") {
  if (g.is_zero()) return LaurentSeries::zero(var, order);
  int mden = g.den().root_multiplicity(Rational(1));
  int mnum = g.num().root_multiplicity(Rational(1));
  if (mden - mnum > max_pole)
    throw std::domain_error("hair_expand: pole order at t=1 exceeds limit " + std::to_string(max_pole));
  int work = order + 2 * mden + 1;
  LaurentSeries e = LaurentSeries::exponential(var, work);
  LaurentSeries num = g.num().eval_series(e);
  LaurentSeries den = g.den().eval_series(e);
  return (num * den.inverse()).truncated(order);
}

// Alexander polynomial of the (p,q) torus knot,
// (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), normalized so that it evaluates to 1
// at t = 1. A polynomial for q > 0; for q < 0 a unit multiple of one.
inline RationalFunction alexander_torus(int p, int q) {
  if (p < 2 || (q > -2 && q < 2)) throw std::invalid_argument("alexander_torus: need p >= 2 and |q| >= 2");
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw std::invalid_argument("alexander_torus: p and q must be coprime");
  int qa = q < 0 ? -q : q;
  IntPoly num = IntPoly::t_power_minus_one(p * qa) * IntPoly::t_power_minus_one(1);
  IntPoly den = IntPoly::t_power_minus_one(p) * IntPoly::t_power_minus_one(qa);
  RationalFunction delta(num, den);
  if (q < 0)
    delta = delta / RationalFunction::from_poly(IntPoly::monomial(1, qa * (p - 1)));
  return delta;
}

// Wh_{p,q}(x) = -1/2 log Delta(e^x), with Delta symmetrized by the unit
// t^{-(p-1)(q-1)/2} so the result is an even series.
inline LaurentSeries wh_series(int p, int q, int order, const std::string& var = "x") {
  RationalFunction delta = alexander_torus(p, q);
  LaurentSeries s = hair_expand(delta, order, 8, var);
  LaurentSeries l = s.log();
  // The symmetrizing unit e^{-m x} removes exactly the linear term.
  Rational m = (order >= 1) ? l.coeff(1) : Rational(0);
  if (q >= 2 && m != Rational((p - 1) * (q - 1), 2))
    throw std::logic_error("wh_series: unexpected symmetrization exponent");
  LaurentSeries wh = (l - LaurentSeries::monomial(var, m, 1, order)) * Rational(-1, 2);
  for (int e = wh.min_exp(); e <= wh.order(); ++e)
    if (e % 2 != 0 && wh.coeff(e) != 0)
      throw std::logic_error("wh_series: symmetrized series is not even");
  return wh;
}

}  // namespace bubbletree
