#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubbletree/laurent.hpp"
#include "bubbletree/rational_function.hpp"
#include "bubbletree/torus.hpp"

namespace bubbletree {

struct LiftContext {
  int r;
  int series_depth;

  LiftContext(int r_, int series_depth_ = 40) : r(r_), series_depth(series_depth_) {
    if (r < 2) throw std::invalid_argument("lift context: r must be >= 2");
    if (series_depth < 1) throw std::invalid_argument("lift context: depth must be positive");
  }
};

// lift_r on a t-series: keep the coefficients of exponents divisible by r
// and divide the exponents. Validity shrinks to floor(order / r).
inline LaurentSeries lift_series(const LaurentSeries& s, int r) {
  if (!s.is_zero() && s.min_exp() < 0)
    throw std::domain_error("lift_series: series has a pole at t = 0");
  int new_order = s.order() >= 0 ? s.order() / r : -1;
  if (new_order < 0) throw std::domain_error("lift_series: depth too small for this r");
  std::vector<Rational> cs(static_cast<size_t>(new_order + 1), Rational(0));
  for (int k = 0; k * r <= s.order(); ++k) cs[static_cast<size_t>(k)] = s.coeff(k * r);
  return LaurentSeries(s.var(), 0, std::move(cs), new_order);
}

// lift_r of a rational function, computed at series level: expand at t = 0
// to the context depth, filter exponents. The per-diagram global factor r is
// applied at the tree level, not here.
inline LaurentSeries lift_r_series(const RationalFunction& g, const LiftContext& ctx) {
  return lift_series(g.taylor_at_zero("t", ctx.series_depth), ctx.r);
}

// Pi_r multiplies a diagram by r^{-chi}; for a bubble tree with V circles
// -chi = V - 1.
inline DecoratedTree pi_r(const DecoratedTree& t, int r) {
  DecoratedTree out = t;
  out.coefficient *= pow_rational(Rational(r), t.tree.vertex_count() - 1);
  return out;
}

// A tree whose decorations have been expanded to t-series (used to compare
// the two covering operators without assuming where the powers of r sit).
struct ExpandedTree {
  ColoredMultigraph tree;
  Rational coefficient;
  std::vector<LaurentSeries> vertex_series;
};

// Plain Taylor expansion of every decoration.
inline ExpandedTree expand_tree(const DecoratedTree& t, int depth) {
  ExpandedTree out{t.tree, t.coefficient, {}};
  for (const auto& v : t.vertices) {
    if (v.valence < 1)
      throw std::invalid_argument("expand_tree: valence-0 decorations have no rational form");
    out.vertex_series.push_back(decoration_value(v.scale, v.valence).taylor_at_zero("t", depth));
  }
  return out;
}

// lift_r of a decorated tree: every decoration is lifted as a series and the
// whole diagram picks up one global factor r. Requires all scales coprime to
// r and valences >= 1.
inline ExpandedTree lift_r_tree(const DecoratedTree& t, const LiftContext& ctx) {
  ExpandedTree out{t.tree, t.coefficient * Rational(ctx.r), {}};
  for (const auto& v : t.vertices) {
    if (v.valence < 1)
      throw std::invalid_argument("lift_r_tree: valence-0 decorations are outside the lift domain");
    int n = v.scale < 0 ? -v.scale : v.scale;
    if (std::gcd(n, ctx.r) != 1)
      throw std::invalid_argument("lift_r_tree: vertex scale not coprime to r");
    out.vertex_series.push_back(lift_r_series(decoration_value(v.scale, v.valence), ctx));
  }
  return out;
}

// Verification data for lift_r = Pi_r on one tree: the two sides must be
// proportional vertex by vertex with the ratios multiplying up to the
// coefficient ratio. Reported per tree and r.
struct LiftCheck {
  int r = 0;
  int euler_exponent = 0;     // V - 1
  int series_match_depth = 0;
  bool verdict = false;
};

inline LiftCheck verify_lift_equals_pi(const DecoratedTree& t, const LiftContext& ctx) {
  LiftCheck check;
  check.r = ctx.r;
  check.euler_exponent = t.tree.vertex_count() - 1;
  check.series_match_depth = ctx.series_depth / ctx.r;

  ExpandedTree lifted = lift_r_tree(t, ctx);
  ExpandedTree plain = expand_tree(pi_r(t, ctx.r), check.series_match_depth);

  // per-vertex ratio lambda_v with lifted_v = lambda_v * plain_v
  Rational ratio_product(1);
  for (size_t v = 0; v < lifted.vertex_series.size(); ++v) {
    const LaurentSeries& ls = lifted.vertex_series[v];
    const LaurentSeries& ps = plain.vertex_series[v];
    if (ps.is_zero() || ls.is_zero()) return check;  // decorations never vanish here
    if (ps.coeff(ls.min_exp()) == 0) return check;
    Rational lambda = ls.coefficients().front() / ps.coeff(ls.min_exp());
    LaurentSeries scaled = ps * lambda;
    if (!agree_through(ls, scaled.truncated(check.series_match_depth), check.series_match_depth))
      return check;
    ratio_product *= lambda;
  }
  // total objects: lifted.coeff * prod(lambda_v) * plain decorations versus
  // plain.coeff * plain decorations
  check.verdict = (lifted.coefficient * ratio_product == plain.coefficient);
  return check;
}

}  // namespace bubbletree
