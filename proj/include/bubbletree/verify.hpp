#pragma once

#include <string>
#include <vector>

#include "bubbletree/covering.hpp"
#include "bubbletree/json_io.hpp"
#include "bubbletree/substitution.hpp"
#include "bubbletree/torus.hpp"
#include "bubbletree/wheels.hpp"

namespace bubbletree {

struct CheckResult {
  std::string name;
  bool pass = false;
  json detail;
};

struct VerifyOptions {
  int p = 2;
  int q = 3;
  int e_max = 3;
  int order = 12;
  std::vector<int> r_values = {5, 7};
};

namespace checks {

// Frozen groundwork values: first wheel coefficients of f and the Laurent
// expansion of h(e^x). The independent derivations live in the unit suite.
inline CheckResult series_groundwork() {
  CheckResult r{"series-groundwork", false, {}};
  LaurentSeries f = series_f(1, 4);
  bool f_ok = f.coeff(2) == Rational(1, 48) && f.coeff(4) == Rational(-1, 5760) &&
              f.coeff(0) == 0 && f.coeff(1) == 0 && f.coeff(3) == 0;
  LaurentSeries h = hair_expand(h_function(1), 3);
  bool h_ok = h.min_exp() == -1 && h.coeff(-1) == 2 && h.coeff(0) == 0 &&
              h.coeff(1) == Rational(1, 6) && h.coeff(2) == 0 && h.coeff(3) == Rational(-1, 360);
  r.pass = f_ok && h_ok;
  r.detail = json{{"f", to_json(f)}, {"hair_h", to_json(h)}};
  return r;
}

// The two-parameter gluing example: seven displayed coefficients.
inline CheckResult product_example() {
  CheckResult r{"product-example", false, {}};
  int emax = 3;
  GraphSeries ea = graph_exp(GraphSeries::single(emax, single_vertex_graph(kColorA)), 4);
  GraphSeries eb = graph_exp(GraphSeries::single(emax, single_vertex_graph(kColorB)), 4);
  GraphSeries prod = glue_product(ea, eb, {kColorA}, {kColorB});
  struct Expect {
    ColoredMultigraph g;
    Rational c;
  };
  std::vector<Expect> want = {
      {single_vertex_graph("a"), Rational(1)},
      {single_vertex_graph("b"), Rational(1)},
      {two_vertex_graph("a", "b", 1), Rational(1)},
      {two_vertex_graph("a", "b", 2), Rational(1)},
      {path3_graph("a", "b", "a"), Rational(1, 2)},
      {path3_graph("b", "a", "b"), Rational(1, 2)},
      {two_vertex_graph("a", "b", 3), Rational(1)},
  };
  r.pass = true;
  json items = json::array();
  for (const auto& w : want) {
    bool ok = prod.coeff(w.g) == w.c;
    r.pass = r.pass && ok;
    items.push_back(json{{"graph", to_json(w.g)}, {"expected", to_fraction_string(w.c)},
                         {"got", to_fraction_string(prod.coeff(w.g))}, {"ok", ok}});
  }
  r.detail = json{{"coefficients", items}};
  return r;
}

// The X_{p,q} display through two edges, for one parameter pair.
inline GraphSeries expected_xpq_display(int p, int q, int emax) {
  GraphSeries e(emax);
  Rational s(1, p * q);
  Rational u = s * s;
  e.add(single_vertex_graph("a"), Rational(1));
  e.add(single_vertex_graph("b"), Rational(1));
  e.add(single_vertex_graph("c"), Rational(-1));
  e.add(two_vertex_graph("a", "b", 1), s);
  e.add(two_vertex_graph("a", "c", 1), -s);
  e.add(two_vertex_graph("b", "c", 1), -s);
  e.add(two_vertex_graph("c", "c", 1), s);
  e.add(two_vertex_graph("a", "b", 2), u);
  e.add(two_vertex_graph("a", "c", 2), -u);
  e.add(two_vertex_graph("b", "c", 2), -u);
  e.add(two_vertex_graph("c", "c", 2), u);
  e.add(path3_graph("a", "b", "a"), u / 2);
  e.add(path3_graph("b", "a", "b"), u / 2);
  e.add(path3_graph("c", "a", "c"), u / 2);
  e.add(path3_graph("c", "b", "c"), u / 2);
  e.add(path3_graph("c", "c", "c"), -u * 2);
  e.add(path3_graph("a", "c", "a"), -u / 2);
  e.add(path3_graph("b", "c", "b"), -u / 2);
  e.add(path3_graph("a", "c", "b"), -u);
  e.add(path3_graph("a", "c", "c"), u * 2);
  e.add(path3_graph("b", "c", "c"), u * 2);
  e.add(path3_graph("c", "a", "b"), -u);
  e.add(path3_graph("c", "b", "a"), -u);
  return e;
}

inline CheckResult xpq_display(int p, int q, int e_max) {
  CheckResult r{"xpq-display-" + std::to_string(p) + "-" + std::to_string(q), false, {}};
  TorusParams params(p, q, e_max);
  GraphSeries got = x_pq_limit(params).restricted_to_edges(2);
  GraphSeries want = expected_xpq_display(p, q, e_max);
  r.pass = (got == want);
  r.detail = json{{"p", p}, {"q", q}, {"e_max", e_max}, {"terms_through_two_edges", to_json(got)}};
  return r;
}

// Convergence: X^{n+1}_{pq} - X^n_{pq} supported on >= n edges; stabilization
// within e_max + 3 iterations.
inline CheckResult convergence(int p, int q, int e_max) {
  CheckResult r{"convergence", false, {}};
  TorusParams params(p, q, e_max);
  TorusIterates it = x_sequence(params);
  bool support_ok = true;
  json diffs = json::array();
  for (size_t n = 0; n + 1 < it.x_pq.size(); ++n) {
    GraphSeries diff = it.x_pq[n + 1] - it.x_pq[n];
    int min_edges = diff.empty() ? -1 : 1 << 20;
    for (const auto& [g, c] : diff.terms()) min_edges = std::min(min_edges, g.edge_count());
    bool ok = diff.empty() || min_edges >= static_cast<int>(n);
    support_ok = support_ok && ok;
    diffs.push_back(json{{"n", n}, {"min_edges", diff.empty() ? json(nullptr) : json(min_edges)},
                         {"terms", diff.size()}, {"ok", ok}});
  }
  bool stabilized = it.stabilized_at >= 0 && it.stabilized_at <= params.edge_limit + 3;
  r.pass = support_ok && stabilized;
  r.detail = json{{"p", p}, {"q", q}, {"e_max", e_max},
                  {"stabilized_at", it.stabilized_at}, {"differences", diffs}};
  return r;
}

// One-loop rationality: hair of the valence-0 part of Y^rat equals
// f(x) - (1/2) log Delta(e^x) through the given order.
inline CheckResult one_loop(int p, int q, int order) {
  CheckResult r{"one-loop-" + std::to_string(p) + "-" + std::to_string(q), false, {}};
  TorusParams params(p, q, 1);
  LaurentSeries lhs = LaurentSeries::zero("x", order);
  for (const auto& t : y_rat(params)) {
    if (t.tree.vertex_count() != 1 || t.vertices[0].valence != 0) continue;
    lhs = lhs + series_f(t.vertices[0].scale, order) * t.coefficient;
  }
  LaurentSeries rhs = series_f(1, order) + wh_series(p, q, order);
  r.pass = agree_through(lhs, rhs, order);
  r.detail = json{{"p", p}, {"q", q}, {"order", order},
                  {"hair_valence0", to_json(lhs)}, {"f_plus_wh", to_json(rhs)}};
  return r;
}

// Tree-only degree claim.
inline CheckResult degrees() {
  CheckResult r{"bprime-degrees", false, {}};
  bool ok = true;
  json items = json::array();
  auto triangle = ColoredMultigraph::canonical({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  for (const auto& g : {two_vertex_graph("a", "b", 2), two_vertex_graph("a", "b", 3), triangle}) {
    auto terms = substitution_terms(g);
    int max_deg = -(1 << 20);
    for (const auto& t : terms) max_deg = std::max(max_deg, bprime_degree(t));
    bool this_ok = !terms.empty() && max_deg <= -1;
    ok = ok && this_ok;
    items.push_back(json{{"graph", to_json(g)}, {"terms", terms.size()},
                         {"max_degree", max_deg}, {"ok", this_ok}});
  }
  for (const auto& g : {single_vertex_graph("a"), two_vertex_graph("a", "b", 1),
                        path3_graph("a", "b", "a")}) {
    auto terms = substitution_terms(g);
    bool this_ok = !terms.empty();
    for (const auto& t : terms) {
      this_ok = this_ok && (bprime_degree(t) == 0);
      for (const auto& fr : t.vertex_fragments) this_ok = this_ok && (fr.p == 0);
    }
    ok = ok && this_ok;
    items.push_back(json{{"graph", to_json(g)}, {"terms", terms.size()},
                         {"all_degree_zero_p_zero", this_ok}});
  }
  r.pass = ok;
  r.detail = json{{"sources", items}};
  return r;
}

inline json profile_to_json(const LegProfile& p) {
  json out = json::array();
  for (const auto& [k, v] : p) out.push_back(json{{"legs", k}, {"coeff", to_fraction_string(v)}});
  return out;
}

// Brute-force gluing versus symbolic leg profiles on the three witness
// graphs; the path fixes the valence-2 normalization.
inline CheckResult substitution_oracle(int p, int q, int total_degree) {
  CheckResult r{"substitution-oracle", false, {}};
  std::map<Color, LaurentSeries> series = {{"a", series_f(p, total_degree + 2)},
                                           {"b", series_f(q, total_degree + 2)}};
  json items = json::array();
  bool ok = true;

  auto compare = [&](const ColoredMultigraph& g, const DecoratedTree& t, const std::string& name) {
    LegProfile brute = brute_force_glue(g, series, total_degree);
    LegProfile symb = leg_profile_of_tree(t, total_degree);
    bool eq = (brute == symb);
    ok = ok && eq;
    items.push_back(json{{"graph", name}, {"N", total_degree}, {"ok", eq},
                         {"brute", profile_to_json(brute)}, {"symbolic", profile_to_json(symb)}});
  };

  compare(single_vertex_graph("a"), DecoratedTree{single_vertex_graph("a"), Rational(1), {{p, 0}}},
          "dot");
  compare(two_vertex_graph("a", "b", 1),
          DecoratedTree{two_vertex_graph("a", "b", 1), Rational(1), {{p, 1}, {q, 1}}}, "edge");
  auto path = path3_graph("a", "b", "a");
  std::vector<TreeVertex> vs;
  for (int v = 0; v < 3; ++v)
    vs.push_back({path.colors()[static_cast<size_t>(v)] == "a" ? p : q, path.valence(v)});
  compare(path, DecoratedTree{path, Rational(1), vs}, "path");

  r.pass = ok;
  r.detail = json{{"p", p}, {"q", q}, {"comparisons", items}, {"valence2_normalization", 1}};
  return r;
}

// Covering action: lift_r = Pi_r on multi-vertex trees plus the function
// identities on h and its D-derivatives.
inline CheckResult lift(int p, int q, const std::vector<int>& r_values, int depth = 40) {
  CheckResult r{"lift", false, {}};
  TorusParams params(p, q, 2);
  auto trees = y_rat(params);
  bool ok = true;
  json tree_items = json::array();
  for (const auto& t : trees) {
    if (t.tree.vertex_count() < 2 || t.tree.vertex_count() > 3) continue;
    for (int rv : r_values) {
      LiftCheck check = verify_lift_equals_pi(t, LiftContext(rv, depth * rv));
      ok = ok && check.verdict;
      tree_items.push_back(json{{"tree", to_json(t.tree)}, {"r", rv},
                                {"euler_exponent", check.euler_exponent},
                                {"series_match_depth", check.series_match_depth},
                                {"verdict", check.verdict}});
    }
  }
  json fn_items = json::array();
  for (int rv : r_values) {
    for (int n : {2, 3, 6}) {
      if (std::gcd(n, rv) != 1) continue;
      for (int i = 0; i <= 3; ++i) {
        RationalFunction g = apply_D(h_function(n), i);
        LaurentSeries lifted = lift_r_series(g, LiftContext(rv, depth * rv));
        LaurentSeries scaled = g.taylor_at_zero("t", depth) * pow_rational(Rational(rv), i);
        bool eq = agree_through(lifted, scaled, depth);
        ok = ok && eq;
        fn_items.push_back(json{{"n", n}, {"i", i}, {"r", rv}, {"ok", eq}});
      }
    }
  }
  r.pass = ok;
  r.detail = json{{"trees", tree_items}, {"function_identities", fn_items}, {"depth", depth}};
  return r;
}

}  // namespace checks

// Named suites driven by the CLI and by the acceptance harness.
inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  bool all = (suite == "all");
  bool known = all;
  if (all || suite == "series") {
    known = true;
    out.push_back(checks::series_groundwork());
  }
  if (all || suite == "paper-examples") {
    known = true;
    out.push_back(checks::product_example());
    out.push_back(checks::xpq_display(2, 3, opt.e_max));
    out.push_back(checks::xpq_display(2, 5, opt.e_max));
  }
  if (all || suite == "convergence") {
    known = true;
    out.push_back(checks::convergence(opt.p, opt.q, std::max(opt.e_max, 4)));
  }
  if (all || suite == "one-loop") {
    known = true;
    if (suite == "one-loop" && !(opt.p == 2 && opt.q == 3)) {
      out.push_back(checks::one_loop(opt.p, opt.q, opt.order));
    } else {
      out.push_back(checks::one_loop(2, 3, opt.order));
      out.push_back(checks::one_loop(2, 5, opt.order));
      out.push_back(checks::one_loop(3, 4, opt.order));
    }
  }
  if (all || suite == "degrees") {
    known = true;
    out.push_back(checks::degrees());
  }
  if (all || suite == "substitution-oracle") {
    known = true;
    out.push_back(checks::substitution_oracle(2, 3, 10));
  }
  if (all || suite == "lift") {
    known = true;
    out.push_back(checks::lift(2, 3, opt.r_values));
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

inline json report_json(const std::string& suite, const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool pass = true;
  for (const auto& r : results) {
    pass = pass && r.pass;
    checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return json{{"suite", suite}, {"pass", pass}, {"checks", checks}};
}

}  // namespace bubbletree
