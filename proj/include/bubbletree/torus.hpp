#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubbletree/graph_series.hpp"
#include "bubbletree/wheels.hpp"

namespace bubbletree {

// Color conventions for the gluing-graph recursion: the active parameter *
// stands for the wheel series f(x); a, b, c are inert and stand for f(px),
// f(qx), f(pqx).
inline const Color kColorA = "a";
inline const Color kColorB = "b";
inline const Color kColorC = "c";
inline const Color kColorActive = "*";

struct TorusParams {
  int p;
  int q;
  int edge_limit;

  TorusParams(int p_, int q_, int edge_limit_) : p(p_), q(q_), edge_limit(edge_limit_) {
    if (p < 2) throw std::invalid_argument("torus parameters: p must be >= 2");
    if (q > -2 && q < 2) throw std::invalid_argument("torus parameters: |q| must be >= 2");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
      throw std::invalid_argument("torus parameters: p and q must be coprime");
    if (edge_limit < 0) throw std::invalid_argument("torus parameters: negative edge limit");
  }

  int scale_of(const Color& c) const {
    if (c == kColorA) return p;
    if (c == kColorB) return q;
    if (c == kColorC) return p * q;
    throw std::invalid_argument("torus parameters: no scale for color " + c);
  }
};

// X^{-1}_{pq} = a^p b^q (dot_a x dot_b), the seed of the recursion.
inline GraphSeries x_minus_one(const TorusParams& params) {
  GraphSeries da = GraphSeries::single(params.edge_limit, single_vertex_graph(kColorA));
  GraphSeries db = GraphSeries::single(params.edge_limit, single_vertex_graph(kColorB));
  GraphSeries t = glue_log(da, db, {kColorA}, {kColorB});
  return rescale(rescale(t, kColorA, Rational(params.p)), kColorB, Rational(params.q));
}

// X^k_{pq}: divide by (pq)^(valence) at the active vertices, then recolor
// them to c. The order matters: only the active legs pick up the division.
inline GraphSeries pq_projection(const GraphSeries& x, const TorusParams& params) {
  return relabel(rescale(x, kColorActive, Rational(params.p) * Rational(params.q)),
                 {{kColorActive, kColorC}});
}

// X^{n+1} = (X^{n-1}_{pq} - X^n_{pq}) x_{abc,*} X^n - (X^{n-1}_{pq} - X^n_{pq}),
// new edges joining inert vertices of the difference to active vertices of X^n.
inline GraphSeries recursion_step(const GraphSeries& x_prev_pq, const GraphSeries& x_cur,
                                  const GraphSeries& x_cur_pq, const TorusParams& params) {
  if (x_prev_pq.edge_limit() != params.edge_limit || x_cur.edge_limit() != params.edge_limit ||
      x_cur_pq.edge_limit() != params.edge_limit)
    throw std::invalid_argument("recursion_step: inputs must share the parameter edge limit");
  GraphSeries delta = x_prev_pq - x_cur_pq;
  for (const auto& col : delta.color_set())
    if (col == kColorActive)
      throw std::invalid_argument("recursion_step: the inert difference may not contain active vertices");
  GraphSeries glued = glue_log(delta, x_cur, {kColorA, kColorB, kColorC}, {kColorActive});
  return glued - delta;
}

// The whole iteration, kept for convergence diagnostics: x[k] is X^k and
// x_pq[k] its projection, k starting at 0; prev_pq starts at X^{-1}_{pq}.
struct TorusIterates {
  GraphSeries x_minus_one_pq;
  std::vector<GraphSeries> x;     // X^0, X^1, ...
  std::vector<GraphSeries> x_pq;  // X^0_{pq}, X^1_{pq}, ...
  int stabilized_at = -1;         // smallest n with X^{n+1}_{pq} = X^n_{pq}
};

inline TorusIterates x_sequence(const TorusParams& params) {
  TorusIterates it{x_minus_one(params), {}, {}, -1};
  GraphSeries x0 = GraphSeries::single(params.edge_limit, single_vertex_graph(kColorActive));
  it.x.push_back(x0);
  it.x_pq.push_back(pq_projection(x0, params));

  int max_iter = params.edge_limit + 3;
  for (int n = 0; n < max_iter; ++n) {
    const GraphSeries& prev_pq = (n == 0) ? it.x_minus_one_pq : it.x_pq[static_cast<size_t>(n - 1)];
    GraphSeries next = recursion_step(prev_pq, it.x[static_cast<size_t>(n)],
                                      it.x_pq[static_cast<size_t>(n)], params);
    GraphSeries next_pq = pq_projection(next, params);
    bool stable = (next_pq == it.x_pq[static_cast<size_t>(n)]);
    it.x.push_back(std::move(next));
    it.x_pq.push_back(std::move(next_pq));
    if (stable) {
      it.stabilized_at = n;
      return it;
    }
  }
  throw std::runtime_error("x_sequence: projections did not stabilize within " +
                           std::to_string(max_iter) + " iterations (engine error)");
}

// X_{p,q} = lim_n (X^{-1}_{pq} - X^n_{pq}), evaluated at the stable iterate.
inline GraphSeries x_pq_limit(const TorusParams& params) {
  TorusIterates it = x_sequence(params);
  return it.x_minus_one_pq - it.x_pq.back();
}

// The tree terms of a series, in canonical order.
inline std::vector<std::pair<ColoredMultigraph, Rational>> extract_trees(const GraphSeries& x) {
  std::vector<std::pair<ColoredMultigraph, Rational>> out;
  for (const auto& [g, c] : x.terms())
    if (g.is_tree()) out.emplace_back(g, c);
  return out;
}

// A tree of X_{p,q} with its decoration data: per vertex the scale
// n in {p, q, pq} and the valence k. The decoration itself is f(n h) for
// k = 0 and (n/4) D^{k-1} h(t^n) for k >= 1 (t = e^h), see
// decoration_value below.
struct TreeVertex {
  int scale;
  int valence;
};

struct DecoratedTree {
  ColoredMultigraph tree;
  Rational coefficient;
  std::vector<TreeVertex> vertices;  // indexed by canonical vertex order
};

inline std::vector<DecoratedTree> y_rat(const TorusParams& params) {
  GraphSeries x = x_pq_limit(params);
  std::vector<DecoratedTree> out;
  for (const auto& [g, c] : extract_trees(x)) {
    DecoratedTree t{g, c, {}};
    for (int v = 0; v < g.vertex_count(); ++v)
      t.vertices.push_back({params.scale_of(g.colors()[static_cast<size_t>(v)]), g.valence(v)});
    out.push_back(std::move(t));
  }
  return out;
}

// Rational decoration carried by a valence-k circle of scale n:
//   (n/4) D^{k-1} [ (t^n + 1)/(t^n - 1) ].
// Under the hair map t = e^h this is the regular part of the full vertex
// factor (d/dh)^{k-1} [ n f'(n h) ]; the per-valence normalization resolved
// by the brute-force gluing oracle is 1. The sign of n is immaterial since
// h(t^{-n}) = -h(t^n) cancels against the prefactor.
inline RationalFunction decoration_value(int scale, int valence) {
  if (valence < 1) throw std::invalid_argument("decoration_value: needs valence >= 1");
  int n = scale < 0 ? -scale : scale;
  if (n == 0) throw std::invalid_argument("decoration_value: zero scale");
  return apply_D(h_function(n), valence - 1) * Rational(n, 4);
}

// (d/dh)^{k-1} of 1/(2h): the polar part separating the full vertex factor
// from its rational (degree-0) decoration.
inline LaurentSeries polar_part(int valence, int order, const std::string& var = "x") {
  if (valence < 1) throw std::invalid_argument("polar_part: needs valence >= 1");
  Rational c(1, 2);
  for (int i = 1; i < valence; ++i) c *= Rational(-i);
  return LaurentSeries::monomial(var, c, -valence, order);
}

// Full vertex factor as a power series in the circle variable: f(nh) for
// valence 0, else hair(decoration) minus the polar part. The poles cancel
// exactly; a leftover pole signals a mis-normalized decoration.
inline LaurentSeries vertex_factor_series(int scale, int valence, int order,
                                          const std::string& var = "x") {
  int n = scale < 0 ? -scale : scale;
  if (valence == 0) return series_f(n, order, var);
  LaurentSeries s =
      hair_expand(decoration_value(scale, valence), order, valence + 2, var) - polar_part(valence, order, var);
  if (!s.is_zero() && s.min_exp() < 0)
    throw std::logic_error("vertex_factor_series: decoration left a pole of order " +
                           std::to_string(-s.min_exp()));
  return s;
}

}  // namespace bubbletree
