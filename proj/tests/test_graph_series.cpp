#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bubbletree/graph_series.hpp"

using namespace bubbletree;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

GraphSeries dot(const Color& c, int emax) {
  return GraphSeries::single(emax, single_vertex_graph(c));
}

// Oracle for exp(.a) . exp(.b): enumerate labeled graphs (j a-vertices, k
// b-vertices, any multiset of a-b edges) with weight 1/(j! k!), identifying
// isomorphism classes by permutation search only.
std::map<std::string, Rational> labeled_product_oracle(int max_vertices, int max_edges) {
  std::map<std::string, Rational> out;
  for (int j = 0; j <= max_vertices; ++j) {
    for (int k = 0; j + k <= max_vertices; ++k) {
      std::vector<Color> colors(static_cast<size_t>(j), "a");
      colors.insert(colors.end(), static_cast<size_t>(k), "b");
      Rational w(1, factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(k)));
      std::vector<Edge> grid;
      for (int u = 0; u < j; ++u)
        for (int v = 0; v < k; ++v) grid.emplace_back(u, j + v);
      std::vector<Edge> current;
      std::function<void(size_t)> rec = [&](size_t idx) {
        out[ColoredMultigraph::canonical(colors, current).key()] += w;
        if (static_cast<int>(current.size()) == max_edges) return;
        for (size_t i = idx; i < grid.size(); ++i) {
          current.push_back(grid[i]);
          rec(i);
          current.pop_back();
        }
      };
      rec(0);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("series container basics") {
  GraphSeries s(3);
  auto g = single_vertex_graph("a");
  s.add(g, Q(1, 2));
  s.add(g, Q(1, 2));
  CHECK(s.coeff(g) == 1);
  s.add(g, Q(-1));
  CHECK(s.empty());

  // edge budget drops and records
  GraphSeries t(1);
  t.add(two_vertex_graph("a", "b", 2), Q(1));
  CHECK(t.empty());
  CHECK(t.dropped() == 1);
}

TEST_CASE("graph_exp of a single vertex") {
  GraphSeries x = dot("a", 3);
  GraphSeries e = graph_exp(x, 4);
  CHECK(e.coeff(ColoredMultigraph()) == 1);
  CHECK(e.coeff(single_vertex_graph("a")) == 1);
  auto two = ColoredMultigraph::canonical({"a", "a"}, {});
  CHECK(e.coeff(two) == Q(1, 2));
  auto three = ColoredMultigraph::canonical({"a", "a", "a"}, {});
  CHECK(e.coeff(three) == Q(1, 6));

  CHECK(graph_exp(GraphSeries(3)) == GraphSeries::unit(3));
  CHECK_THROWS(graph_exp(GraphSeries::unit(3)));
  GraphSeries disc(3);
  disc.add(ColoredMultigraph::canonical({"a", "b"}, {}), Q(1));
  CHECK_THROWS(graph_exp(disc));
}

TEST_CASE("graph_log basics and round trips") {
  CHECK(graph_log(GraphSeries::unit(3)).empty());
  GraphSeries missing_unit(3);
  missing_unit.add(single_vertex_graph("a"), Q(1));
  CHECK_THROWS(graph_log(missing_unit));

  GraphSeries x = dot("a", 3) + GraphSeries::single(3, two_vertex_graph("a", "b", 1), Q(1));
  CHECK(graph_log(graph_exp(x)) == x);

  // exp(log(u)) = u for a group-like u on its validity window
  GraphSeries u = graph_exp(x);
  GraphSeries lu = graph_log(u);
  CHECK(graph_exp(lu, u.max_vertices()) == u);
}

TEST_CASE("glue_product reproduces the two-parameter example") {
  int emax = 3;
  GraphSeries ea = graph_exp(dot("a", emax), 4);
  GraphSeries eb = graph_exp(dot("b", emax), 4);
  GraphSeries prod = glue_product(ea, eb, {"a"}, {"b"});

  CHECK(prod.coeff(single_vertex_graph("a")) == 1);
  CHECK(prod.coeff(single_vertex_graph("b")) == 1);
  CHECK(prod.coeff(two_vertex_graph("a", "b", 1)) == 1);
  CHECK(prod.coeff(two_vertex_graph("a", "b", 2)) == 1);
  CHECK(prod.coeff(path3_graph("a", "b", "a")) == Q(1, 2));
  CHECK(prod.coeff(path3_graph("b", "a", "b")) == Q(1, 2));
  CHECK(prod.coeff(two_vertex_graph("a", "b", 3)) == 1);

  // unit absorption and disjointness validation
  CHECK(glue_product(ea, GraphSeries::unit(emax), {"a"}, {"b"}) == ea);
  CHECK_THROWS(glue_product(ea, eb, {"a"}, {"a"}));
}

TEST_CASE("glue_product against the labeled enumeration oracle") {
  int emax = 3;
  GraphSeries ea = graph_exp(dot("a", emax), 4);
  GraphSeries eb = graph_exp(dot("b", emax), 4);
  GraphSeries prod = glue_product(ea, eb, {"a"}, {"b"});
  auto oracle = labeled_product_oracle(4, 3);
  int compared = 0;
  for (const auto& [g, c] : prod.terms()) {
    if (g.vertex_count() > 4 || g.is_empty()) continue;
    auto it = oracle.find(g.key());
    REQUIRE(it != oracle.end());
    CHECK(c == it->second);
    ++compared;
  }
  CHECK(compared > 10);
}

TEST_CASE("glue_log equals the displayed connected series") {
  int emax = 3;
  GraphSeries x = glue_log(dot("a", emax), dot("b", emax), {"a"}, {"b"});
  CHECK(x.coeff(single_vertex_graph("a")) == 1);
  CHECK(x.coeff(single_vertex_graph("b")) == 1);
  CHECK(x.coeff(two_vertex_graph("a", "b", 1)) == 1);
  CHECK(x.coeff(two_vertex_graph("a", "b", 2)) == 1);
  CHECK(x.coeff(path3_graph("a", "b", "a")) == Q(1, 2));
  CHECK(x.coeff(path3_graph("b", "a", "b")) == Q(1, 2));
  CHECK(x.coeff(two_vertex_graph("a", "b", 3)) == 1);
  CHECK(x.all_connected());

  // gluing against the zero series is the identity
  CHECK(glue_log(x, GraphSeries(emax), {"a", "b"}, {"*"}) == x);
  CHECK(glue_log(GraphSeries(emax), x, {"*"}, {"a", "b"}) == x);
}

TEST_CASE("glue_log agrees with log(glue_product(exp, exp))") {
  int emax = 3;
  std::vector<std::pair<GraphSeries, GraphSeries>> cases;
  cases.emplace_back(dot("a", emax), dot("b", emax));
  cases.emplace_back(dot("a", emax) + GraphSeries::single(emax, two_vertex_graph("a", "c", 1), Q(-2)),
                     dot("b", emax));
  for (const auto& [xa, xb] : cases) {
    GraphSeries direct = glue_log(xa, xb, {"a", "c"}, {"b"});
    GraphSeries composed = graph_log(glue_product(graph_exp(xa), graph_exp(xb), {"a", "c"}, {"b"}));
    // compare where the truncated composition is exact: connected graphs
    // within the edge budget
    for (const auto& [g, c] : direct.terms()) CHECK(composed.coeff(g) == c);
    for (const auto& [g, c] : composed.terms())
      if (g.is_connected()) CHECK(direct.coeff(g) == c);
  }
}

TEST_CASE("glue products of group-like series are group-like") {
  // The truncated exponentials are faithful on graphs with at most
  // `vbudget` vertices, so the log must be connected exactly there; terms
  // beyond the window are truncation artifacts.
  int emax = 3, vbudget = 4;
  GraphSeries prod =
      glue_product(graph_exp(dot("a", emax), vbudget), graph_exp(dot("b", emax), vbudget), {"a"}, {"b"});
  GraphSeries lg = graph_log(prod);
  int connected_seen = 0;
  for (const auto& [g, c] : lg.terms())
    if (g.vertex_count() <= vbudget) {
      CHECK(g.is_connected());
      ++connected_seen;
    }
  CHECK(connected_seen >= 7);
}

TEST_CASE("rescale") {
  int emax = 3;
  GraphSeries ab = GraphSeries::single(emax, two_vertex_graph("a", "b", 1));
  CHECK(rescale(ab, "a", Q(5)).coeff(two_vertex_graph("a", "b", 1)) == Q(1, 5));
  CHECK(rescale(dot("a", emax), "a", Q(5)) == dot("a", emax));
  GraphSeries dbl = GraphSeries::single(emax, two_vertex_graph("a", "b", 2));
  CHECK(rescale(dbl, "a", Q(5)).coeff(two_vertex_graph("a", "b", 2)) == Q(1, 25));
  CHECK_THROWS(rescale(ab, "a", Q(0)));

  // composition and identity
  GraphSeries s = ab + dbl * Q(3) + dot("a", emax);
  CHECK(rescale(rescale(s, "a", Q(2)), "a", Q(3)) == rescale(s, "a", Q(6)));
  CHECK(rescale(s, "a", Q(1)) == s);
}

TEST_CASE("relabel merges newly isomorphic classes") {
  int emax = 3;
  CHECK(relabel(dot("*", emax), {{"*", "c"}}) == dot("c", emax));
  GraphSeries s = GraphSeries::single(emax, path3_graph("a", "b", "a"), Q(1, 2)) +
                  GraphSeries::single(emax, path3_graph("b", "a", "b"), Q(1, 2));
  GraphSeries merged = relabel(s, {{"a", "c"}, {"b", "c"}});
  CHECK(merged.size() == 1);
  CHECK(merged.coeff(path3_graph("c", "c", "c")) == 1);

  GraphSeries ss = GraphSeries::single(emax, two_vertex_graph("*", "*", 1));
  CHECK(relabel(ss, {{"*", "c"}}).coeff(two_vertex_graph("c", "c", 1)) == 1);
}
