#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bubbletree/json_io.hpp"
#include "bubbletree/latex_io.hpp"
#include "bubbletree/verify.hpp"

using namespace bubbletree;

namespace {

std::string graph_text(const ColoredMultigraph& g) {
  if (g.is_empty()) return "1";
  std::string s = "(";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v) s += " ";
    s += g.colors()[static_cast<size_t>(v)];
  }
  if (g.edge_count() > 0) {
    s += " ;";
    for (const auto& e : g.edges()) s += " " + std::to_string(e.first) + "-" + std::to_string(e.second);
  }
  s += ")";
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

int run_expand(int p, int q, int e_max, const std::string& format, const std::string& out) {
  TorusParams params(p, q, e_max);
  GraphSeries x = x_pq_limit(params);
  if (format == "json") {
    json j{{"p", p}, {"q", q}, {"e_max", e_max}, {"series", to_json(x)}};
    emit(j.dump(2), out);
  } else if (format == "latex") {
    emit(graph_series_to_latex(x), out);
  } else {
    std::string s;
    for (const auto& [g, c] : x.terms())
      s += to_fraction_string(c) + "  " + graph_text(g) + "\n";
    emit(s, out);
  }
  return 0;
}

int run_trees(int p, int q, int e_max, const std::string& format, const std::string& out) {
  TorusParams params(p, q, e_max);
  std::vector<DecoratedTree> trees = y_rat(params);
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : trees) arr.push_back(to_json(t, params));
    json j{{"p", p}, {"q", q}, {"e_max", e_max}, {"trees", arr}};
    emit(j.dump(2), out);
  } else if (format == "latex") {
    emit(trees_to_latex(trees), out);
  } else {
    std::string s;
    for (const auto& t : trees) {
      s += to_fraction_string(t.coefficient) + "  " + graph_text(t.tree) + "  [";
      for (size_t v = 0; v < t.vertices.size(); ++v) {
        if (v) s += ", ";
        s += "n=" + std::to_string(t.vertices[v].scale) +
             " k=" + std::to_string(t.vertices[v].valence);
      }
      s += "]\n";
    }
    emit(s, out);
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, const std::string& out) {
  std::vector<CheckResult> results = run_suite(suite, opt);
  json report = report_json(suite, results);
  bool pass = report.at("pass").get<bool>();
  for (const auto& r : results)
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
  if (!out.empty()) emit(report.dump(2), out);
  if (const char* dir = std::getenv("BUBBLETREE_REPORT_DIR")) {
    emit(report.dump(2), std::string(dir) + "/" + suite + ".json");
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bubbletree: exact bubble-tree expansions of the rational torus-knot invariant"};
  app.require_subcommand(1);

  int p = 2, q = 3, e_max = 3, order = 12;
  std::string format = "text", out, suite = "all";
  std::vector<int> r_values = {5, 7};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "first torus parameter (>= 2)");
    cmd->add_option("--q", q, "second torus parameter (coprime to p, |q| >= 2)");
    cmd->add_option("--e-max", e_max, "edge truncation");
    cmd->add_option("--out", out, "write output to a file instead of stdout");
  };

  CLI::App* expand = app.add_subcommand("expand", "print the gluing-graph series X_{p,q}");
  add_common(expand);
  expand->add_option("--format", format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* trees = app.add_subcommand("trees", "print the decorated tree expansion");
  add_common(trees);
  trees->add_option("--format", format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite,
                     "all | series | paper-examples | convergence | one-loop | degrees | "
                     "substitution-oracle | lift");
  verify->add_option("--order", order, "series truncation order");
  verify->add_option("--r", r_values, "covering degrees for the lift suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (expand->parsed()) return run_expand(p, q, e_max, format, out);
    if (trees->parsed()) return run_trees(p, q, e_max, format, out);
    VerifyOptions opt{p, q, e_max, order, r_values};
    return run_verify(suite, opt, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
