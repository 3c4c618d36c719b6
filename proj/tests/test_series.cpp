#include "doctest.h"

#include "bubbletree/laurent.hpp"
#include "bubbletree/polynomial.hpp"
#include "bubbletree/rational.hpp"

using namespace bubbletree;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(Q(2, 4) == Q(1, 2));
  CHECK(to_fraction_string(Q(-3, 6)) == "-1/2");
  CHECK(rational_from_string("-1/2") == Q(-1, 2));
  CHECK(rational_from_string("7") == Q(7));
  CHECK(pow_rational(Q(2, 3), -2) == Q(9, 4));
  CHECK(binomial(BigInt(7), 3) == 35);
  CHECK(binomial(BigInt(3), 5) == 0);
  CHECK(factorial(6) == 720);
  CHECK_THROWS(rational_from_string("x/y"));
}

TEST_CASE("laurent construction and normalization") {
  LaurentSeries z = LaurentSeries::zero("x", 5);
  CHECK(z.is_zero());
  CHECK(z.min_exp() == 6);
  CHECK(z.coeff(3) == 0);
  CHECK_THROWS(z.coeff(6));

  LaurentSeries s("x", -1, {Q(0), Q(2), Q(0), Q(5)}, 2);
  CHECK(s.min_exp() == 0);  // leading zero trimmed
  CHECK(s.coeff(0) == 2);
  CHECK(s.coeff(2) == 5);
  CHECK_THROWS(LaurentSeries("x", 0, {Q(1)}, 3));  // length mismatch
}

TEST_CASE("laurent arithmetic propagates validity") {
  LaurentSeries a = LaurentSeries::monomial("x", Q(1), -1, 4);  // 1/x known to x^4
  LaurentSeries b = LaurentSeries::monomial("x", Q(1), 2, 3);   // x^2 known to x^3
  LaurentSeries sum = a + b;
  CHECK(sum.order() == 3);
  CHECK(sum.coeff(-1) == 1);
  CHECK(sum.coeff(2) == 1);
  LaurentSeries prod = a * b;
  // min(4 + 2, 3 + (-1)) = 2
  CHECK(prod.order() == 2);
  CHECK(prod.coeff(1) == 1);
}

TEST_CASE("laurent inverse and division") {
  // 1/(1 - x) = sum x^k
  std::vector<Rational> cs = {Q(1), Q(-1)};
  cs.resize(9, Q(0));
  LaurentSeries g("x", 0, cs, 8);
  LaurentSeries inv = g.inverse();
  for (int k = 0; k <= inv.order(); ++k) CHECK(inv.coeff(k) == 1);

  // Laurent case: inverse of x + x^2 starts at 1/x
  LaurentSeries h("x", 1, {Q(1), Q(1), Q(0), Q(0), Q(0), Q(0)}, 6);
  LaurentSeries hi = h.inverse();
  CHECK(hi.min_exp() == -1);
  CHECK(hi.coeff(-1) == 1);
  CHECK(hi.coeff(0) == -1);
  CHECK(hi.coeff(1) == 1);
  CHECK((h * hi).coeff(0) == 1);
}

TEST_CASE("laurent log/exp round trip") {
  LaurentSeries u("x", 1, {Q(1), Q(-1, 2), Q(1, 3), Q(7), Q(0), Q(2)}, 6);
  LaurentSeries e = u.exp();
  CHECK(e.coeff(0) == 1);
  CHECK(agree_through(e.log(), u, 6));

  LaurentSeries one_plus = e;  // group-like side: exp then log is identity
  LaurentSeries l = one_plus.log();
  CHECK(agree_through(l.exp(), e, 6));
}

TEST_CASE("laurent derivative and variable scaling") {
  LaurentSeries s("x", -2, {Q(3), Q(0), Q(1), Q(5), Q(2)}, 2);
  LaurentSeries d = s.derivative();
  CHECK(d.coeff(-3) == -6);
  CHECK(d.coeff(-1) == 0);  // the constant term drops
  CHECK(d.coeff(0) == 5);
  CHECK(d.order() == 1);

  LaurentSeries t = s.scale_variable(Q(2));
  CHECK(t.coeff(-2) == Q(3, 4));
  CHECK(t.coeff(1) == 10);
}

TEST_CASE("integer polynomial basics") {
  IntPoly p{-1, 0, 1};  // t^2 - 1
  IntPoly q{1, 1};      // t + 1
  CHECK(poly_divide_exact(p, q) == IntPoly{-1, 1});
  CHECK_THROWS(poly_divide_exact(IntPoly{1, 0, 1}, q));
  CHECK(poly_gcd(p, q) == q);
  CHECK(p.eval(Q(3)) == 8);
  CHECK(p.root_multiplicity(Q(1)) == 1);
  IntPoly sq = p * p;
  CHECK(sq.root_multiplicity(Q(1)) == 2);
  CHECK(IntPoly::t_power_minus_one(3).str() == "t^3 - 1");
}

TEST_CASE("polynomial gcd with content normalization") {
  IntPoly a{2, 4};   // 2(2t + 1)... actually 4t + 2
  IntPoly b{1, 3, 2};  // (t+1)(2t+1)
  IntPoly g = poly_gcd(a, b);
  CHECK(g == IntPoly{1, 2});  // primitive, positive leading
}
