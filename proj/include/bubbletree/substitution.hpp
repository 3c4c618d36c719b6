#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bubbletree/graph.hpp"
#include "bubbletree/laurent.hpp"
#include "bubbletree/torus.hpp"

namespace bubbletree {

// ---------------------------------------------------------------------------
// Resolution of a gluing graph into a trivalent skeleton: every vertex is
// replaced by a circle attached to its incident edge ends in a chosen cyclic
// order (one resolution per choice, orders identified up to rotation only).
// Cohomology classes live in H^1 of the skeleton, computed against the
// fundamental cycles of the lowest-index spanning tree and written as
// integer vectors (pairing of an edge with each basis cycle).
// ---------------------------------------------------------------------------

using ClassVector = std::vector<int>;

struct ResolvedDiagram {
  int rank = 0;                                       // first Betti number, = source edges + 1
  std::vector<std::vector<ClassVector>> arc_classes;  // [source vertex][arc index]
  std::vector<ClassVector> edge_classes;              // [source edge]
  std::vector<ClassVector> circle_class;              // class of each circle (common arc class
                                                      // for trees, virtual arc for bare circles)
  std::vector<std::vector<int>> h1_basis;             // [cycle][skeleton edge] signed incidence
  int skeleton_edges = 0;
};

namespace detail {

struct SkeletonEdge {
  int from, to;   // node ids (self-loops allowed here)
  int kind;       // 0 = arc, 1 = source edge
  int source_id;  // vertex for arcs, edge index for source edges
  int arc_pos;    // position of the arc around its circle
};

inline ResolvedDiagram resolve_one(const ColoredMultigraph& g,
                                   const std::vector<std::vector<int>>& end_order) {
  int nv = g.vertex_count();
  // Edge ends per vertex in the chosen cyclic order; node ids per (vertex, slot).
  std::vector<std::vector<int>> ends(static_cast<size_t>(nv));  // end ids in cyclic order
  std::vector<int> end_vertex, end_edge;
  for (int e = 0; e < g.edge_count(); ++e) {
    end_vertex.push_back(g.edges()[static_cast<size_t>(e)].first);
    end_edge.push_back(e);
    end_vertex.push_back(g.edges()[static_cast<size_t>(e)].second);
    end_edge.push_back(e);
  }
  {
    std::vector<std::vector<int>> at(static_cast<size_t>(nv));
    for (int id = 0; id < static_cast<int>(end_vertex.size()); ++id)
      at[static_cast<size_t>(end_vertex[static_cast<size_t>(id)])].push_back(id);
    for (int v = 0; v < nv; ++v) {
      const auto& order = end_order[static_cast<size_t>(v)];
      for (int idx : order) ends[static_cast<size_t>(v)].push_back(at[static_cast<size_t>(v)][static_cast<size_t>(idx)]);
    }
  }

  // Nodes: one per edge end; bare circles get one virtual node carrying a
  // single self-loop arc so every circle contributes a cycle.
  std::vector<int> node_of_end(end_vertex.size(), -1);
  std::vector<int> virtual_node(static_cast<size_t>(nv), -1);
  int nodes = 0;
  for (int v = 0; v < nv; ++v) {
    if (ends[static_cast<size_t>(v)].empty()) {
      virtual_node[static_cast<size_t>(v)] = nodes++;
    } else {
      for (int end : ends[static_cast<size_t>(v)]) node_of_end[static_cast<size_t>(end)] = nodes++;
    }
  }

  std::vector<SkeletonEdge> skel;
  // arcs, in canonical order: by vertex, then by position around the circle
  for (int v = 0; v < nv; ++v) {
    const auto& ev = ends[static_cast<size_t>(v)];
    if (ev.empty()) {
      int n = virtual_node[static_cast<size_t>(v)];
      skel.push_back({n, n, 0, v, 0});
      continue;
    }
    int k = static_cast<int>(ev.size());
    for (int i = 0; i < k; ++i) {
      int from = node_of_end[static_cast<size_t>(ev[static_cast<size_t>(i)])];
      int to = node_of_end[static_cast<size_t>(ev[static_cast<size_t>((i + 1) % k)])];
      skel.push_back({from, to, 0, v, i});
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = node_of_end[static_cast<size_t>(2 * e)];
    int b = node_of_end[static_cast<size_t>(2 * e + 1)];
    skel.push_back({a, b, 1, e, 0});
  }

  // Lowest-index spanning forest; every non-tree edge spawns a basis cycle.
  std::vector<int> parent(static_cast<size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a)
      a = parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
    return a;
  };
  std::vector<bool> in_tree(skel.size(), false);
  std::vector<int> cotree;
  for (size_t i = 0; i < skel.size(); ++i) {
    int ra = find(skel[i].from), rb = find(skel[i].to);
    if (ra != rb) {
      parent[static_cast<size_t>(ra)] = rb;
      in_tree[i] = true;
    } else {
      cotree.push_back(static_cast<int>(i));
    }
  }

  // Tree adjacency for path walks.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nodes));  // (edge id, +1 fwd / -1 bwd)
  for (size_t i = 0; i < skel.size(); ++i) {
    if (!in_tree[i]) continue;
    adj[static_cast<size_t>(skel[i].from)].emplace_back(static_cast<int>(i), 1);
    adj[static_cast<size_t>(skel[i].to)].emplace_back(static_cast<int>(i), -1);
  }
  // signed tree path from u to v by DFS
  auto tree_path = [&](int u, int v) {
    std::vector<std::pair<int, int>> path;
    if (u == v) return path;
    std::vector<int> prev_edge(static_cast<size_t>(nodes), -1), prev_node(static_cast<size_t>(nodes), -1),
        prev_sign(static_cast<size_t>(nodes), 0);
    std::vector<int> stack = {u};
    std::vector<bool> seen(static_cast<size_t>(nodes), false);
    seen[static_cast<size_t>(u)] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (cur == v) break;
      for (auto [eid, sgn] : adj[static_cast<size_t>(cur)]) {
        int nxt = (sgn > 0) ? skel[static_cast<size_t>(eid)].to : skel[static_cast<size_t>(eid)].from;
        if (seen[static_cast<size_t>(nxt)]) continue;
        seen[static_cast<size_t>(nxt)] = true;
        prev_edge[static_cast<size_t>(nxt)] = eid;
        prev_node[static_cast<size_t>(nxt)] = cur;
        prev_sign[static_cast<size_t>(nxt)] = sgn;
        stack.push_back(nxt);
      }
    }
    for (int cur = v; cur != u; cur = prev_node[static_cast<size_t>(cur)]) {
      if (prev_edge[static_cast<size_t>(cur)] < 0)
        throw std::logic_error("resolve: skeleton of a connected graph is disconnected");
      path.emplace_back(prev_edge[static_cast<size_t>(cur)], prev_sign[static_cast<size_t>(cur)]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Fundamental cycles as signed incidence rows over skeleton edges.
  ResolvedDiagram out;
  out.rank = static_cast<int>(cotree.size());
  out.skeleton_edges = static_cast<int>(skel.size());
  for (int f : cotree) {
    std::vector<int> row(skel.size(), 0);
    row[static_cast<size_t>(f)] += 1;
    for (auto [eid, sgn] : tree_path(skel[static_cast<size_t>(f)].to, skel[static_cast<size_t>(f)].from))
      row[static_cast<size_t>(eid)] += sgn;
    out.h1_basis.push_back(std::move(row));
  }

  auto class_of_edge = [&](int eid) {
    ClassVector c(out.h1_basis.size(), 0);
    for (size_t r = 0; r < out.h1_basis.size(); ++r) c[r] = out.h1_basis[r][static_cast<size_t>(eid)];
    return c;
  };

  out.arc_classes.assign(static_cast<size_t>(nv), {});
  out.circle_class.assign(static_cast<size_t>(nv), {});
  out.edge_classes.assign(static_cast<size_t>(g.edge_count()), {});
  for (size_t i = 0; i < skel.size(); ++i) {
    if (skel[i].kind == 0) {
      int v = skel[i].source_id;
      if (ends[static_cast<size_t>(v)].empty()) {
        out.circle_class[static_cast<size_t>(v)] = class_of_edge(static_cast<int>(i));
      } else {
        auto& list = out.arc_classes[static_cast<size_t>(v)];
        if (static_cast<int>(list.size()) <= skel[i].arc_pos) list.resize(static_cast<size_t>(skel[i].arc_pos + 1));
        list[static_cast<size_t>(skel[i].arc_pos)] = class_of_edge(static_cast<int>(i));
      }
    } else {
      out.edge_classes[static_cast<size_t>(skel[i].source_id)] = class_of_edge(static_cast<int>(i));
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!ends[static_cast<size_t>(v)].empty())
      out.circle_class[static_cast<size_t>(v)] = out.arc_classes[static_cast<size_t>(v)][0];

  // Consistency: around every node, class(arc in) - class(arc out) +/- the
  // source edge class vanishes (the coboundary relation).
  for (int v = 0; v < nv; ++v) {
    const auto& ev = ends[static_cast<size_t>(v)];
    int k = static_cast<int>(ev.size());
    for (int i = 0; i < k; ++i) {
      // node at slot i: incoming arc i-1, outgoing arc i, edge end ev[i]
      const ClassVector& ain = out.arc_classes[static_cast<size_t>(v)][static_cast<size_t>((i + k - 1) % k)];
      const ClassVector& aout = out.arc_classes[static_cast<size_t>(v)][static_cast<size_t>(i)];
      int eid = end_edge[static_cast<size_t>(ev[static_cast<size_t>(i)])];
      // the source edge is oriented from its first end (2e) to its second
      int sign = (ev[static_cast<size_t>(i)] == 2 * eid) ? -1 : +1;  // +1 if pointing into this node
      for (size_t r = 0; r < out.h1_basis.size(); ++r) {
        int lhs = ain[r] - aout[r] + sign * out.edge_classes[static_cast<size_t>(eid)][r];
        if (lhs != 0) throw std::logic_error("resolve: arc class coboundary relation violated");
      }
    }
  }
  return out;
}

}  // namespace detail

// All resolutions of a connected gluing graph with at most `max_edges`
// edges (cyclic orderings per vertex, rotations identified).
inline std::vector<ResolvedDiagram> resolve(const ColoredMultigraph& g, int max_edges = 4) {
  if (!g.is_connected()) throw std::invalid_argument("resolve: graph must be connected");
  if (g.edge_count() > max_edges)
    throw std::invalid_argument("resolve: more than " + std::to_string(max_edges) + " edges");

  int nv = g.vertex_count();
  std::vector<int> valence(static_cast<size_t>(nv), 0);
  for (const auto& e : g.edges()) {
    ++valence[static_cast<size_t>(e.first)];
    ++valence[static_cast<size_t>(e.second)];
  }
  // cyclic orders per vertex: first end fixed, the rest permuted
  std::vector<std::vector<std::vector<int>>> orders(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    int k = valence[static_cast<size_t>(v)];
    std::vector<int> rest;
    for (int i = 1; i < k; ++i) rest.push_back(i);
    do {
      std::vector<int> order = {0};
      order.insert(order.end(), rest.begin(), rest.end());
      if (k == 0) order.clear();
      orders[static_cast<size_t>(v)].push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::vector<ResolvedDiagram> out;
  std::vector<std::vector<int>> choice(static_cast<size_t>(nv));
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      out.push_back(detail::resolve_one(g, choice));
      return;
    }
    for (const auto& ord : orders[static_cast<size_t>(v)]) {
      choice[static_cast<size_t>(v)] = ord;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// The telescoping reduction of a vertex sum
//   sum_{i_1+...+i_k = n-k} x_1^{i_1} ... x_k^{i_k}
// into fragments with all residual classes equal. Each fragment carries p
// linear denominators (x_l - x_m) and, at wheel order n, the multiplicity
// binom(n-p-1, k-p-1).
// ---------------------------------------------------------------------------

// One branch of the reduction. At wheel order n it evaluates to
//   sign * binom(n-p-1, k-p-1) * (prod strays) * y^{n-k+p-sigma} / (prod denominators),
// where sigma is the total stray degree. Each step discards one class as a
// numerator monomial (degree-0 strays are dropped); the net rational-side
// degree sigma - p is <= -1 whenever p >= 1.
struct ReduceFragment {
  int sign = 1;
  ClassVector common_class;                              // y
  int p = 0;                                             // reductions on this branch
  int stray_degree = 0;                                  // sigma
  std::vector<std::pair<ClassVector, int>> strays;       // discarded monomials (class, degree >= 1)
  std::vector<std::pair<ClassVector, ClassVector>> denominators;  // (x_l, x_m) pairs
};

// Selector returns the index pair to reduce; classes passed are all current
// slots. Used to cross-check reduction-order independence.
using ReducePairSelector = std::function<std::pair<size_t, size_t>(const std::vector<ClassVector>&)>;

inline std::pair<size_t, size_t> lex_least_pair(const std::vector<ClassVector>& classes) {
  std::pair<size_t, size_t> best{0, 0};
  bool have = false;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] == classes[j]) continue;
      auto lo = std::min(classes[i], classes[j]);
      auto hi = std::max(classes[i], classes[j]);
      auto cur_lo = std::min(classes[best.first], classes[best.second]);
      auto cur_hi = std::max(classes[best.first], classes[best.second]);
      if (!have || std::tie(lo, hi) < std::tie(cur_lo, cur_hi)) {
        best = {i, j};
        have = true;
      }
    }
  if (!have) throw std::logic_error("lex_least_pair: all classes equal");
  return best;
}

inline std::vector<ReduceFragment> reduce_term(const std::vector<ClassVector>& classes,
                                               const ReducePairSelector& select = lex_least_pair) {
  if (classes.empty()) throw std::invalid_argument("reduce_term: needs at least one class");
  std::vector<ReduceFragment> out;
  // Slots carry the class and the minimum exponent accumulated by earlier
  // merges; a merge of slots (X,mu) and (Y,nu) splits into
  //   + (X, mu+1) with stray Y^nu   and   - (Y, nu+1) with stray X^mu,
  // each over the new linear term (X - Y).
  struct Slot {
    ClassVector cls;
    int min;
  };
  struct State {
    std::vector<Slot> slots;
    ReduceFragment acc;
  };
  State init;
  for (const auto& c : classes) init.slots.push_back({c, 0});
  std::vector<State> stack{std::move(init)};
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    bool all_equal = true;
    for (size_t i = 1; i < st.slots.size(); ++i)
      if (st.slots[i].cls != st.slots[0].cls) {
        all_equal = false;
        break;
      }
    if (all_equal) {
      st.acc.common_class = st.slots[0].cls;
      out.push_back(std::move(st.acc));
      continue;
    }
    std::vector<ClassVector> bare;
    for (const auto& s : st.slots) bare.push_back(s.cls);
    auto [i, j] = select(bare);
    if (i == j || st.slots[i].cls == st.slots[j].cls)
      throw std::logic_error("reduce_term: selector returned an invalid pair");
    Slot sl = st.slots[i], sm = st.slots[j];
    std::vector<Slot> rest;
    for (size_t t = 0; t < st.slots.size(); ++t)
      if (t != i && t != j) rest.push_back(st.slots[t]);
    for (int branch = 0; branch < 2; ++branch) {
      const Slot& keep = (branch == 0) ? sl : sm;
      const Slot& drop = (branch == 0) ? sm : sl;
      State nxt;
      nxt.slots = rest;
      nxt.slots.push_back({keep.cls, keep.min + 1});
      nxt.acc = st.acc;
      nxt.acc.p += 1;
      nxt.acc.sign *= (branch == 0 ? 1 : -1);
      nxt.acc.denominators.emplace_back(sl.cls, sm.cls);
      if (drop.min > 0) {
        nxt.acc.strays.emplace_back(drop.cls, drop.min);
        nxt.acc.stray_degree += drop.min;
      }
      stack.push_back(std::move(nxt));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution terms and the B' degree. Exponential factors have degree 0,
// every linear denominator counts -1 and every stray numerator monomial
// counts its degree, so deg = sum_i (sigma_i - p_i). Since sigma_i <= p_i - 1
// whenever p_i >= 1, each reduced vertex pushes the degree at least one
// below zero.
// ---------------------------------------------------------------------------

struct SubstitutionTerm {
  int resolution = 0;                        // index into resolve(g)
  std::vector<ReduceFragment> vertex_fragments;  // one per source vertex
  int bprime_degree = 0;                     // sum of (sigma - p) over vertices
};

inline int bprime_degree(const SubstitutionTerm& t) { return t.bprime_degree; }

inline std::vector<SubstitutionTerm> substitution_terms(const ColoredMultigraph& g,
                                                        int max_edges = 4) {
  std::vector<ResolvedDiagram> resolutions = resolve(g, max_edges);
  std::vector<SubstitutionTerm> out;
  for (size_t r = 0; r < resolutions.size(); ++r) {
    const ResolvedDiagram& rd = resolutions[r];
    std::vector<std::vector<ReduceFragment>> per_vertex;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& arcs = rd.arc_classes[static_cast<size_t>(v)];
      if (arcs.empty()) {
        ReduceFragment trivial;
        trivial.common_class = rd.circle_class[static_cast<size_t>(v)];
        per_vertex.push_back({trivial});
      } else {
        per_vertex.push_back(reduce_term(arcs));
      }
    }
    std::vector<size_t> idx(per_vertex.size(), 0);
    while (true) {
      SubstitutionTerm term;
      term.resolution = static_cast<int>(r);
      for (size_t v = 0; v < per_vertex.size(); ++v) {
        const ReduceFragment& fr = per_vertex[v][idx[v]];
        term.vertex_fragments.push_back(fr);
        term.bprime_degree += fr.stray_degree - fr.p;
      }
      out.push_back(std::move(term));
      size_t v = 0;
      for (; v < idx.size(); ++v) {
        if (++idx[v] < per_vertex[v].size()) break;
        idx[v] = 0;
      }
      if (v == idx.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Leg profiles: projection of a decorated series to per-circle leg counts.
// ---------------------------------------------------------------------------

using LegProfile = std::map<std::vector<int>, Rational>;

// Direct gluing enumeration: at every vertex, pick a wheel order n and an
// explicit cyclic word (edge attachments in cyclic order with free-leg gaps);
// the wheel contributes its series coefficient, a factor n for the rotation
// class of the first attachment, and one summand per word. Graph edges glue
// independently at both endpoints, so the vertex enumerations multiply.
inline LegProfile brute_force_glue(const ColoredMultigraph& g,
                                   const std::map<Color, LaurentSeries>& vertex_series,
                                   int total_degree) {
  if (g.edge_count() > 2) throw std::invalid_argument("brute_force_glue: at most 2 edges supported");
  if (total_degree > 12) throw std::invalid_argument("brute_force_glue: total degree capped at 12");
  int nv = g.vertex_count();

  // per-vertex free-leg weight tables from explicit word enumeration
  std::vector<std::map<int, Rational>> table(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    auto it = vertex_series.find(g.colors()[static_cast<size_t>(v)]);
    if (it == vertex_series.end())
      throw std::invalid_argument("brute_force_glue: no series for color " + g.colors()[static_cast<size_t>(v)]);
    const LaurentSeries& s = it->second;
    if (!s.is_zero() && s.min_exp() < 0)
      throw std::invalid_argument("brute_force_glue: vertex series has a pole");
    int k = g.valence(v);
    if (s.order() < total_degree + k)
      throw std::invalid_argument("brute_force_glue: vertex series order too small");
    for (int free = 0; free <= total_degree; ++free) {
      int n = free + k;
      if (n < 1 && k == 0 && free == 0) continue;  // no order-0 wheel
      Rational a = (n >= 1) ? s.coeff(n) : Rational(0);
      if (a == 0) continue;
      if (k == 0) {
        table[static_cast<size_t>(v)][free] += a;
        continue;
      }
      // enumerate cyclic words: orderings of ends 2..k after the glued first
      // end, then gap compositions i_1 + ... + i_k = n - k
      std::vector<int> rest;
      for (int i = 1; i < k; ++i) rest.push_back(i);
      long words = 0;
      do {
        // count compositions explicitly
        std::vector<int> gaps(static_cast<size_t>(k), 0);
        std::function<void(int, int)> comp = [&](int slot, int remaining) {
          if (slot == k - 1) {
            ++words;
            return;
          }
          for (int take = 0; take <= remaining; ++take) comp(slot + 1, remaining - take);
        };
        comp(0, free);
      } while (std::next_permutation(rest.begin(), rest.end()));
      table[static_cast<size_t>(v)][free] += a * Rational(n) * Rational(words);
    }
  }

  LegProfile out;
  std::vector<int> counts(static_cast<size_t>(nv), 0);
  std::function<void(int, int, Rational)> rec = [&](int v, int used, Rational w) {
    if (v == nv) {
      out[counts] += w;
      return;
    }
    for (const auto& [free, weight] : table[static_cast<size_t>(v)]) {
      if (used + free > total_degree) break;
      counts[static_cast<size_t>(v)] = free;
      rec(v + 1, used + free, w * weight);
    }
    counts[static_cast<size_t>(v)] = 0;
  };
  rec(0, 0, Rational(1));
  // drop zero entries for canonical comparison
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// Symbolic side of the oracle: expand every vertex factor of a decorated
// tree (polar corrections included) and read off per-circle leg counts.
inline LegProfile leg_profile_of_tree(const DecoratedTree& t, int total_degree) {
  int nv = t.tree.vertex_count();
  std::vector<LaurentSeries> factors;
  for (int v = 0; v < nv; ++v) {
    const TreeVertex& tv = t.vertices[static_cast<size_t>(v)];
    factors.push_back(vertex_factor_series(tv.scale, tv.valence, total_degree));
  }
  LegProfile out;
  std::vector<int> counts(static_cast<size_t>(nv), 0);
  std::function<void(int, int, Rational)> rec = [&](int v, int used, Rational w) {
    if (w == 0) return;
    if (v == nv) {
      out[counts] += w;
      return;
    }
    for (int m = 0; m + used <= total_degree; ++m) {
      counts[static_cast<size_t>(v)] = m;
      rec(v + 1, used + m, w * factors[static_cast<size_t>(v)].coeff(m));
    }
    counts[static_cast<size_t>(v)] = 0;
  };
  rec(0, 0, t.coefficient);
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace bubbletree
