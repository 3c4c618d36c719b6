#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bubbletree/graph.hpp"
#include "bubbletree/rational.hpp"

namespace bubbletree {

// Finite rational linear combination of canonical colored multigraphs,
// truncated by edge count. Graphs exceeding the edge budget are dropped and
// counted. Zero coefficients are never stored.
class GraphSeries {
 public:
  explicit GraphSeries(int edge_limit) : edge_limit_(edge_limit), dropped_(0) {
    if (edge_limit < 0) throw std::invalid_argument("graph series: negative edge limit");
  }

  static GraphSeries unit(int edge_limit) {
    GraphSeries s(edge_limit);
    s.add(ColoredMultigraph(), Rational(1));
    return s;
  }
  static GraphSeries single(int edge_limit, const ColoredMultigraph& g, const Rational& c = Rational(1)) {
    GraphSeries s(edge_limit);
    s.add(g, c);
    return s;
  }

  int edge_limit() const { return edge_limit_; }
  long dropped() const { return dropped_; }
  const std::map<ColoredMultigraph, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const ColoredMultigraph& g, const Rational& c) {
    if (c == 0) return;
    if (g.edge_count() > edge_limit_) {
      ++dropped_;
      return;
    }
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const ColoredMultigraph& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool all_connected() const {
    for (const auto& [g, c] : terms_)
      if (!g.is_connected()) return false;
    return true;
  }

  int max_vertices() const {
    int m = 0;
    for (const auto& [g, c] : terms_) m = std::max(m, g.vertex_count());
    return m;
  }

  std::set<Color> color_set() const {
    std::set<Color> s;
    for (const auto& [g, c] : terms_)
      for (const auto& col : g.colors()) s.insert(col);
    return s;
  }

  GraphSeries restricted_to_edges(int emax) const {
    GraphSeries r(edge_limit_);
    for (const auto& [g, c] : terms_)
      if (g.edge_count() <= emax) r.add(g, c);
    return r;
  }

  friend GraphSeries operator-(const GraphSeries& a) {
    GraphSeries r(a.edge_limit_);
    for (const auto& [g, c] : a.terms_) r.add(g, -c);
    return r;
  }
  friend GraphSeries operator+(const GraphSeries& a, const GraphSeries& b) {
    GraphSeries r(std::min(a.edge_limit_, b.edge_limit_));
    for (const auto& [g, c] : a.terms_) r.add(g, c);
    for (const auto& [g, c] : b.terms_) r.add(g, c);
    return r;
  }
  friend GraphSeries operator-(const GraphSeries& a, const GraphSeries& b) { return a + (-b); }
  friend GraphSeries operator*(const GraphSeries& a, const Rational& s) {
    GraphSeries r(a.edge_limit_);
    for (const auto& [g, c] : a.terms_) r.add(g, c * s);
    return r;
  }

  friend bool operator==(const GraphSeries& a, const GraphSeries& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GraphSeries& a, const GraphSeries& b) { return !(a == b); }

 private:
  int edge_limit_;
  long dropped_;
  std::map<ColoredMultigraph, Rational> terms_;
};

namespace detail {

// Disjoint union of labeled graphs, second block shifted.
inline void append_shifted(std::vector<Color>& colors, std::vector<Edge>& edges,
                           const ColoredMultigraph& g) {
  int base = static_cast<int>(colors.size());
  colors.insert(colors.end(), g.colors().begin(), g.colors().end());
  for (const auto& e : g.edges()) edges.emplace_back(e.first + base, e.second + base);
}

// Enumerate multisets of terms of `x` within the given budgets. The callback
// receives the member list (as term iterators) and the exponential-weight
// coefficient prod c_i^{m_i} / m_i!.
using TermVec = std::vector<std::pair<const ColoredMultigraph*, Rational>>;

inline void for_each_multiset(const TermVec& terms, int max_edges, int max_vertices,
                              const std::function<void(const std::vector<size_t>&, const Rational&)>& fn) {
  std::vector<size_t> chosen;
  std::function<void(size_t, int, int)> rec = [&](size_t start, int edges_left, int verts_left) {
    {
      // weight: prod over runs of equal indices of c^m / m!
      Rational w(1);
      size_t i = 0;
      while (i < chosen.size()) {
        size_t j = i;
        while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
        unsigned m = static_cast<unsigned>(j - i);
        w *= pow_rational(terms[chosen[i]].second, static_cast<long>(m)) / Rational(factorial(m));
        i = j;
      }
      fn(chosen, w);
    }
    for (size_t i = start; i < terms.size(); ++i) {
      const ColoredMultigraph& g = *terms[i].first;
      if (g.edge_count() > edges_left || g.vertex_count() > verts_left) continue;
      chosen.push_back(i);
      rec(i, edges_left - g.edge_count(), verts_left - g.vertex_count());
      chosen.pop_back();
    }
  };
  rec(0, max_edges, max_vertices);
}

inline TermVec term_vec(const GraphSeries& s) {
  TermVec v;
  for (const auto& [g, c] : s.terms()) v.emplace_back(&g, c);
  return v;
}

// Multisets of new edges over the pair list, total size between lo and hi.
inline void for_each_edge_multiset(const std::vector<Edge>& pairs, int lo, int hi,
                                   const std::function<void(const std::vector<Edge>&)>& fn) {
  std::vector<Edge> current;
  std::function<void(size_t, int)> rec = [&](size_t idx, int total) {
    if (total >= lo) fn(current);
    if (total == hi) return;
    for (size_t i = idx; i < pairs.size(); ++i) {
      current.push_back(pairs[i]);
      rec(i, total + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace detail

// Disjoint-union product truncated by edges and by an explicit vertex bound.
inline GraphSeries union_product(const GraphSeries& a, const GraphSeries& b, int vertex_limit) {
  GraphSeries r(std::min(a.edge_limit(), b.edge_limit()));
  for (const auto& [g, cg] : a.terms()) {
    for (const auto& [h, ch] : b.terms()) {
      if (g.edge_count() + h.edge_count() > r.edge_limit()) continue;
      if (g.vertex_count() + h.vertex_count() > vertex_limit) continue;
      std::vector<Color> colors;
      std::vector<Edge> edges;
      detail::append_shifted(colors, edges, g);
      detail::append_shifted(colors, edges, h);
      r.add(ColoredMultigraph::canonical(std::move(colors), std::move(edges)), cg * ch);
    }
  }
  return r;
}

// exp of a connected series: sum over multisets of terms (disjoint unions)
// with the usual 1/m! weights, truncated at the edge budget and at
// `vertex_limit` vertices. By default one more vertex than edges is kept,
// which is exact for every connected graph inside the budget.
inline GraphSeries graph_exp(const GraphSeries& x, int vertex_limit = -1) {
  if (x.coeff(ColoredMultigraph()) != 0)
    throw std::invalid_argument("graph_exp: input must not contain the empty graph");
  if (!x.all_connected()) throw std::invalid_argument("graph_exp: input must be connected");
  if (vertex_limit < 0) vertex_limit = x.edge_limit() + 1;
  GraphSeries r(x.edge_limit());
  detail::TermVec terms = detail::term_vec(x);
  detail::for_each_multiset(terms, x.edge_limit(), vertex_limit,
                            [&](const std::vector<size_t>& chosen, const Rational& w) {
                              std::vector<Color> colors;
                              std::vector<Edge> edges;
                              for (size_t i : chosen) detail::append_shifted(colors, edges, *terms[i].first);
                              r.add(ColoredMultigraph::canonical(std::move(colors), std::move(edges)), w);
                            });
  return r;
}

// log of a series with unit coefficient 1, via log(1+v) = sum (-1)^{k+1} v^k/k.
// Powers beyond the vertex support of `u` vanish, so the sum is finite.
inline GraphSeries graph_log(const GraphSeries& u) {
  if (u.coeff(ColoredMultigraph()) != 1)
    throw std::invalid_argument("graph_log: input needs unit coefficient 1 on the empty graph");
  int vmax = u.max_vertices();
  GraphSeries v = u;
  v.add(ColoredMultigraph(), Rational(-1));
  GraphSeries result(u.edge_limit());
  GraphSeries power = v;
  for (int k = 1; k <= std::max(vmax, 1); ++k) {
    result = result + power * Rational((k % 2 == 1) ? 1 : -1, k);
    if (k <= vmax) power = union_product(power, v, vmax);
  }
  return result;
}

// The gluing product: for every pair of terms (G from u, H from v) and every
// multiset of new edges from A-colored vertices of G to B-colored vertices
// of H within the edge budget, add the glued graph with coefficient
// coeff(G) coeff(H). Each unordered edge multiset on the labeled pair is
// counted exactly once.
inline GraphSeries glue_product(const GraphSeries& u, const GraphSeries& v,
                                const std::set<Color>& A, const std::set<Color>& B) {
  for (const auto& c : A)
    if (B.count(c)) throw std::invalid_argument("glue_product: A and B must be disjoint");
  GraphSeries r(std::min(u.edge_limit(), v.edge_limit()));
  for (const auto& [g, cg] : u.terms()) {
    for (const auto& [h, ch] : v.terms()) {
      int budget = r.edge_limit() - g.edge_count() - h.edge_count();
      if (budget < 0) continue;
      std::vector<Color> colors;
      std::vector<Edge> edges;
      detail::append_shifted(colors, edges, g);
      int base = g.vertex_count();
      detail::append_shifted(colors, edges, h);
      std::vector<Edge> pairs;
      for (int i = 0; i < g.vertex_count(); ++i) {
        if (!A.count(g.colors()[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < h.vertex_count(); ++j)
          if (B.count(h.colors()[static_cast<size_t>(j)])) pairs.emplace_back(i, base + j);
      }
      Rational cc = cg * ch;
      detail::for_each_edge_multiset(pairs, 0, budget, [&](const std::vector<Edge>& extra) {
        std::vector<Color> cs = colors;
        std::vector<Edge> es = edges;
        es.insert(es.end(), extra.begin(), extra.end());
        r.add(ColoredMultigraph::canonical(std::move(cs), std::move(es)), cc);
      });
    }
  }
  return r;
}

// x (A x B) y = log(exp(x) . exp(y)): the product of two group-like series is
// group-like, so its log is its connected part. This enumerates exactly the
// connected glued terms: multisets of components from x and from y joined
// into one piece by new A-to-B edges.
inline GraphSeries glue_log(const GraphSeries& x, const GraphSeries& y,
                            const std::set<Color>& A, const std::set<Color>& B) {
  for (const auto& c : A)
    if (B.count(c)) throw std::invalid_argument("glue_log: A and B must be disjoint");
  if (!x.all_connected() || !y.all_connected())
    throw std::invalid_argument("glue_log: inputs must be connected series");
  if (x.coeff(ColoredMultigraph()) != 0 || y.coeff(ColoredMultigraph()) != 0)
    throw std::invalid_argument("glue_log: inputs must not contain the empty graph");

  int emax = std::min(x.edge_limit(), y.edge_limit());
  int vmax = emax + 1;  // a connected graph cannot have more vertices than edges + 1
  GraphSeries r(emax);
  detail::TermVec tx = detail::term_vec(x);
  detail::TermVec ty = detail::term_vec(y);

  detail::for_each_multiset(tx, emax, vmax, [&](const std::vector<size_t>& mx, const Rational& wx) {
    int ex = 0, vx = 0;
    for (size_t i : mx) {
      ex += tx[i].first->edge_count();
      vx += tx[i].first->vertex_count();
    }
    int cx = static_cast<int>(mx.size());
    if (ex + std::max(0, cx - 1) > emax) return;
    detail::for_each_multiset(ty, emax - ex, vmax - vx, [&](const std::vector<size_t>& my, const Rational& wy) {
      int cy = static_cast<int>(my.size());
      if (cx + cy == 0) return;
      // With components on one side only, connectivity forces a single
      // component and no new edges.
      if (cx == 0) {
        if (cy == 1) r.add(*ty[my[0]].first, wy);
        return;
      }
      if (cy == 0) {
        if (cx == 1) r.add(*tx[mx[0]].first, wx);
        return;
      }
      int ey = 0;
      for (size_t i : my) ey += ty[i].first->edge_count();
      int need = cx + cy - 1;
      int budget = emax - ex - ey;
      if (need > budget) return;

      std::vector<Color> colors;
      std::vector<Edge> edges;
      std::vector<int> comp_of;  // component id per vertex
      int comp = 0;
      for (size_t i : mx) {
        for (int k = 0; k < tx[i].first->vertex_count(); ++k) comp_of.push_back(comp);
        detail::append_shifted(colors, edges, *tx[i].first);
        ++comp;
      }
      int base = static_cast<int>(colors.size());
      for (size_t i : my) {
        for (int k = 0; k < ty[i].first->vertex_count(); ++k) comp_of.push_back(comp);
        detail::append_shifted(colors, edges, *ty[i].first);
        ++comp;
      }
      std::vector<Edge> pairs;
      for (int i = 0; i < base; ++i) {
        if (!A.count(colors[static_cast<size_t>(i)])) continue;
        for (int j = base; j < static_cast<int>(colors.size()); ++j)
          if (B.count(colors[static_cast<size_t>(j)])) pairs.emplace_back(i, j);
      }
      if (pairs.empty()) return;
      Rational cc = wx * wy;
      int total_comps = comp;
      detail::for_each_edge_multiset(pairs, need, budget, [&](const std::vector<Edge>& extra) {
        // connectivity on component ids
        std::vector<int> parent(static_cast<size_t>(total_comps));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
          while (parent[static_cast<size_t>(a)] != a)
            a = parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
          return a;
        };
        int merges = 0;
        for (const auto& e : extra) {
          int ra = find(comp_of[static_cast<size_t>(e.first)]);
          int rb = find(comp_of[static_cast<size_t>(e.second)]);
          if (ra != rb) {
            parent[static_cast<size_t>(ra)] = rb;
            ++merges;
          }
        }
        if (merges != total_comps - 1) return;
        std::vector<Color> cs = colors;
        std::vector<Edge> es = edges;
        es.insert(es.end(), extra.begin(), extra.end());
        r.add(ColoredMultigraph::canonical(std::move(cs), std::move(es)), cc);
      });
    });
  });
  return r;
}

// The operator a^r: divides every graph by r^N where N is the total valence
// of a-colored vertices (multi-edges counted with multiplicity).
inline GraphSeries rescale(const GraphSeries& x, const Color& color, const Rational& r) {
  if (r == 0) throw std::invalid_argument("rescale: zero scale");
  GraphSeries out(x.edge_limit());
  for (const auto& [g, c] : x.terms()) {
    int n = g.color_valence(color);
    out.add(g, c * pow_rational(r, -static_cast<long>(n)));
  }
  return out;
}

// Recolor vertices and merge newly isomorphic terms.
inline GraphSeries relabel(const GraphSeries& x, const std::map<Color, Color>& mapping) {
  GraphSeries out(x.edge_limit());
  for (const auto& [g, c] : x.terms()) {
    std::vector<Color> colors = g.colors();
    for (auto& col : colors) {
      auto it = mapping.find(col);
      if (it != mapping.end()) col = it->second;
    }
    out.add(ColoredMultigraph::canonical(std::move(colors), g.edges()), c);
  }
  return out;
}

// Restriction to connected terms.
inline GraphSeries connected_part(const GraphSeries& x) {
  GraphSeries out(x.edge_limit());
  for (const auto& [g, c] : x.terms())
    if (g.is_connected()) out.add(g, c);
  return out;
}

}  // namespace bubbletree
