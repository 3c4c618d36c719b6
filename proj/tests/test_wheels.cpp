#include "doctest.h"

#include <vector>

#include "bubbletree/wheels.hpp"

using namespace bubbletree;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Independent oracle: Bernoulli numbers by the classical recurrence
// sum_{j=0}^{m} binom(m+1, j) B_j = 0, B_0 = 1 (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_upto(int m) {
  std::vector<Rational> b(static_cast<size_t>(m + 1));
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational s(0);
    for (int j = 0; j < n; ++j) s += Rational(binomial(BigInt(n + 1), static_cast<unsigned>(j))) * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(n)] = -s / Rational(n + 1);
  }
  return b;
}

// f(x) = sum_{k>=1} B_{2k} / (2 (2k) (2k)!) x^{2k}, derived from
// d/dy log(sinh y / y) = coth y - 1/y and the Bernoulli expansion of coth.
LaurentSeries f_oracle(int order) {
  auto b = bernoulli_upto(order);
  std::vector<Rational> cs(static_cast<size_t>(order + 1), Rational(0));
  for (int k = 1; 2 * k <= order; ++k)
    cs[static_cast<size_t>(2 * k)] =
        b[static_cast<size_t>(2 * k)] / Rational(BigInt(2) * BigInt(2 * k) * factorial(static_cast<unsigned>(2 * k)));
  return LaurentSeries("x", 0, std::move(cs), order);
}

// coth(x/2) = 2/x + sum_{k>=1} 2 B_{2k} x^{2k-1} / (2k)!
LaurentSeries coth_half_oracle(int order) {
  auto b = bernoulli_upto(order + 1);
  std::vector<Rational> cs(static_cast<size_t>(order + 1 + 1), Rational(0));
  cs[0] = 2;  // exponent -1
  for (int k = 1; 2 * k - 1 <= order; ++k)
    cs[static_cast<size_t>(2 * k - 1 + 1)] =
        Rational(2) * b[static_cast<size_t>(2 * k)] / Rational(factorial(static_cast<unsigned>(2 * k)));
  return LaurentSeries("x", -1, std::move(cs), order);
}

}  // namespace

TEST_CASE("series_f first terms match the wheel coefficients") {
  LaurentSeries f = series_f(1, 4);
  CHECK(f.coeff(2) == Q(1, 48));
  CHECK(f.coeff(4) == Q(-1, 5760));
  CHECK(f.coeff(1) == 0);
  CHECK(f.coeff(3) == 0);

  CHECK(series_f(1, 1).is_zero());

  LaurentSeries f2 = series_f(2, 4);
  CHECK(f2.coeff(2) == Q(1, 12));
  CHECK(f2.coeff(4) == Q(-1, 360));
}

TEST_CASE("series_f against the Bernoulli oracle") {
  CHECK(series_f(1, 16) == f_oracle(16));
  // scaling property: coefficient of x^k gains n^k
  LaurentSeries f = series_f(1, 12);
  LaurentSeries f3 = series_f(3, 12);
  for (int k = 0; k <= 12; ++k) CHECK(f3.coeff(k) == f.coeff(k) * pow_rational(Q(3), k));
  // only even exponents >= 2
  for (int k = 0; k <= 12; ++k)
    if (k % 2 == 1 || k == 0) CHECK(series_f(1, 12).coeff(k) == 0);
}

TEST_CASE("h_function canonical forms") {
  RationalFunction h = h_function(1);
  CHECK(h.num() == IntPoly{1, 1});
  CHECK(h.den() == IntPoly{-1, 1});
  RationalFunction h2 = h_function(2);
  CHECK(h2.num() == IntPoly{1, 0, 1});
  CHECK(h2.den() == IntPoly{-1, 0, 1});
  CHECK(h_function(6).eval(Q(2)) == Q(65, 63));
  CHECK_THROWS(h_function(0));
}

TEST_CASE("apply_D") {
  RationalFunction h = h_function(1);
  CHECK(apply_D(h, 0) == h);
  // Dh = -2t/(t-1)^2
  RationalFunction dh = apply_D(h, 1);
  CHECK(dh == RationalFunction(IntPoly{0, -2}, IntPoly{1, -2, 1}));
  // D(h(t^2)) = -4t^2/(t^2-1)^2, also the chain rule 2 (Dh)(t^2)
  RationalFunction dh2 = apply_D(h_function(2), 1);
  CHECK(dh2 == RationalFunction(IntPoly{0, 0, -4}, IntPoly{1, 0, -2, 0, 1}));
  RationalFunction chain(IntPoly{0, 0, -2 * 2}, IntPoly{1, 0, -2, 0, 1});
  CHECK(dh2 == chain);
  CHECK_THROWS(apply_D(h, -1));
}

TEST_CASE("hair_expand frozen values") {
  // h(e^x) = coth(x/2) = 2/x + x/6 - x^3/360 + ...
  LaurentSeries s = hair_expand(h_function(1), 3);
  CHECK(s.min_exp() == -1);
  CHECK(s.coeff(-1) == 2);
  CHECK(s.coeff(0) == 0);
  CHECK(s.coeff(1) == Q(1, 6));
  CHECK(s.coeff(2) == 0);
  CHECK(s.coeff(3) == Q(-1, 360));

  // e^x itself
  LaurentSeries e = hair_expand(RationalFunction::t(), 2);
  CHECK(e.coeff(0) == 1);
  CHECK(e.coeff(1) == 1);
  CHECK(e.coeff(2) == Q(1, 2));

  // tanh(x/2) = x/2 - ...
  RationalFunction g(IntPoly{-1, 1}, IntPoly{1, 1});
  LaurentSeries t = hair_expand(g, 1);
  CHECK(t.min_exp() == 1);
  CHECK(t.coeff(1) == Q(1, 2));
}

TEST_CASE("hair_expand against the Bernoulli oracle") {
  CHECK(agree_through(hair_expand(h_function(1), 15), coth_half_oracle(15), 15));
}

TEST_CASE("hair_expand pole bound") {
  RationalFunction g(IntPoly{1}, IntPoly::t_power_minus_one(1));  // pole order 1 at t=1
  CHECK_NOTHROW(hair_expand(g, 4));
  RationalFunction bad = g;
  for (int i = 0; i < 8; ++i) bad = bad * g;  // pole order 9
  CHECK_THROWS(hair_expand(bad, 4));
  CHECK_NOTHROW(hair_expand(bad, 4, 10));
}

TEST_CASE("D acts as d/dx through the hair map") {
  for (int n : {1, 2, 3}) {
    RationalFunction g = h_function(n);
    for (int k : {1, 2, 3}) {
      LaurentSeries lhs = hair_expand(apply_D(g, k), 8);
      LaurentSeries rhs = hair_expand(g, 8 + k);
      for (int i = 0; i < k; ++i) rhs = rhs.derivative();
      CHECK(agree_through(lhs, rhs, 8));
    }
  }
}

TEST_CASE("alexander polynomials of torus knots") {
  RationalFunction d23 = alexander_torus(2, 3);
  CHECK(d23 == RationalFunction::from_poly(IntPoly{1, -1, 1}));
  RationalFunction d25 = alexander_torus(2, 5);
  CHECK(d25 == RationalFunction::from_poly(IntPoly{1, -1, 1, -1, 1}));
  CHECK_THROWS(alexander_torus(2, 4));
  CHECK_THROWS(alexander_torus(1, 3));

  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
    RationalFunction d = alexander_torus(p, q);
    CHECK(d.eval(Q(1)) == 1);
    CHECK(d.num().degree() == (p - 1) * (q - 1));
    CHECK(alexander_torus(p, q) == alexander_torus(q, p));
  }
}

TEST_CASE("wh_series frozen value and evenness") {
  // Delta_{2,3}(e^x) symmetrized is 2cosh(x) - 1; -1/2 log of it starts -x^2/2.
  LaurentSeries wh = wh_series(2, 3, 2);
  CHECK(wh.coeff(2) == Q(-1, 2));
  CHECK(wh_series(2, 3, 1).is_zero());
  LaurentSeries wh12 = wh_series(2, 3, 12);
  for (int e = wh12.min_exp(); e <= 12; ++e)
    if (e % 2 == 1) CHECK(wh12.coeff(e) == 0);
}

TEST_CASE("one-loop identity f(px)+f(qx)-f(pqx) = f(x) + Wh") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}}) {
    LaurentSeries lhs = series_f(p, 12) + series_f(q, 12) - series_f(p * q, 12);
    LaurentSeries rhs = series_f(1, 12) + wh_series(p, q, 12);
    CHECK(agree_through(lhs, rhs, 12));
  }
}
