#include "doctest.h"

#include <vector>

#include "bubbletree/covering.hpp"
#include "bubbletree/wheels.hpp"

using namespace bubbletree;

namespace {
Rational Q(long n, long d = 1) { return make_rational(n, d); }
}

TEST_CASE("lift on plain series filters and divides exponents") {
  LaurentSeries t2 = LaurentSeries::monomial("t", Q(1), 2, 8);
  LaurentSeries l = lift_series(t2, 2);
  CHECK(l.coeff(1) == 1);
  CHECK(l.order() == 4);
  LaurentSeries t3 = LaurentSeries::monomial("t", Q(1), 3, 8);
  CHECK(lift_series(t3, 2).is_zero());
  CHECK_THROWS(lift_series(LaurentSeries::monomial("t", Q(1), -1, 8), 2));
}

TEST_CASE("lift fixes h(t^n) when n is coprime to r") {
  for (int r : {5, 7}) {
    for (int n : {2, 3, 6}) {
      LiftContext ctx(r, 40 * r);
      LaurentSeries lifted = lift_r_series(h_function(n), ctx);
      LaurentSeries plain = h_function(n).taylor_at_zero("t", 40);
      CHECK(agree_through(lifted, plain, 40));
    }
  }
}

TEST_CASE("lift scales D^i h(t^n) by r^i") {
  for (int r : {5, 7}) {
    for (int n : {2, 3, 6}) {
      for (int i = 0; i <= 3; ++i) {
        LiftContext ctx(r, 40 * r);
        RationalFunction g = apply_D(h_function(n), i);
        LaurentSeries lifted = lift_r_series(g, ctx);
        LaurentSeries plain = g.taylor_at_zero("t", 40) * pow_rational(Q(r), i);
        CHECK(agree_through(lifted, plain, 40));
      }
    }
  }
}

TEST_CASE("lift_r after lift_s is lift_rs on the h-derivative family") {
  int depth = 420;  // divisible by 35
  for (int n : {2, 3}) {
    for (int i = 0; i <= 2; ++i) {
      LaurentSeries s = apply_D(h_function(n), i).taylor_at_zero("t", depth);
      LaurentSeries two_step = lift_series(lift_series(s, 5), 7);
      LaurentSeries one_step = lift_series(s, 35);
      CHECK(agree_through(two_step, one_step, depth / 35));
    }
  }
}

TEST_CASE("pi_r multiplies by r^(V-1)") {
  DecoratedTree single{single_vertex_graph("a"), Q(1), {{2, 0}}};
  CHECK(pi_r(single, 5).coefficient == 1);

  DecoratedTree edge{two_vertex_graph("a", "b", 1), Q(1, 6), {{2, 1}, {3, 1}}};
  CHECK(pi_r(edge, 5).coefficient == Q(5, 6));

  auto path = path3_graph("a", "b", "a");
  DecoratedTree path_tree{path, Q(1), {{2, 1}, {3, 2}, {2, 1}}};
  CHECK(pi_r(path_tree, 5).coefficient == 25);

  // pi_r . pi_s = pi_rs
  CHECK(pi_r(pi_r(path_tree, 5), 7).coefficient == pi_r(path_tree, 35).coefficient);
}

TEST_CASE("lift_r_tree validation") {
  DecoratedTree edge{two_vertex_graph("a", "b", 1), Q(1, 6), {{2, 1}, {3, 1}}};
  CHECK_THROWS(lift_r_tree(edge, LiftContext(2, 80)));  // scale 2 not coprime to r=2
  DecoratedTree single{single_vertex_graph("a"), Q(1), {{2, 0}}};
  CHECK_THROWS(lift_r_tree(single, LiftContext(5, 200)));  // valence 0 outside the domain
}

TEST_CASE("lift_r_tree carries the global factor and lifts decorations") {
  DecoratedTree edge{two_vertex_graph("a", "b", 1), Q(1, 6), {{2, 1}, {3, 1}}};
  LiftContext ctx(5, 200);
  ExpandedTree lifted = lift_r_tree(edge, ctx);
  CHECK(lifted.coefficient == Q(5, 6));
  // valence-1 decorations are fixed by the lift
  ExpandedTree plain = expand_tree(edge, 40);
  for (size_t v = 0; v < 2; ++v)
    CHECK(agree_through(lifted.vertex_series[v], plain.vertex_series[v], 40));
}

TEST_CASE("lift equals pi on the multi-vertex trees of Y_{2,3}") {
  TorusParams params(2, 3, 2);
  auto trees = y_rat(params);
  int checked = 0;
  for (const auto& t : trees) {
    if (t.tree.vertex_count() < 2 || t.tree.vertex_count() > 3) continue;
    for (int r : {5, 7}) {
      LiftCheck check = verify_lift_equals_pi(t, LiftContext(r, 40 * r));
      CHECK(check.verdict);
      CHECK(check.euler_exponent == t.tree.vertex_count() - 1);
      CHECK(check.series_match_depth == 40);
      ++checked;
    }
  }
  CHECK(checked >= 2 * (4 + 12));  // all one- and two-edge trees, both r values
}
