#pragma once

#include <map>
#include <string>
#include <vector>

#include "bubbletree/graph_series.hpp"
#include "bubbletree/torus.hpp"

namespace bubbletree {

namespace detail {

inline std::string latex_rational(const Rational& r, bool leading) {
  BigInt n = numerator(r), d = denominator(r);
  std::string sign = (n < 0) ? "-" : (leading ? "" : "+");
  BigInt a = boost::multiprecision::abs(n);
  std::string body;
  if (d == 1)
    body = a.str();
  else
    body = "\\tfrac{" + a.str() + "}{" + d.str() + "}";
  return sign + body;
}

inline std::string boxed_color(const Color& c) {
  if (c == kColorA) return "\\fbox{$p$}";
  if (c == kColorB) return "\\fbox{$q$}";
  if (c == kColorC) return "\\fbox{$pq$}";
  if (c == kColorActive) return "\\fbox{$1$}";
  return "\\fbox{$" + c + "$}";
}

inline std::string edge_symbol(int multiplicity) {
  if (multiplicity == 1) return "\\text{--}";
  if (multiplicity == 2) return "{=}";
  if (multiplicity == 3) return "\\equiv";
  return "\\overset{" + std::to_string(multiplicity) + "}{\\text{--}}";
}

// Render a graph in the boxed chain notation when it is a chain of vertices
// (every vertex of valence at most 2 toward at most two neighbors and no
// cycle); otherwise fall back to a generic vertex/edge listing.
inline std::string latex_graph(const ColoredMultigraph& g) {
  int n = g.vertex_count();
  if (n == 0) return "\\varnothing";
  // neighbor multiplicity map
  std::map<int, std::map<int, int>> adj;
  for (const auto& e : g.edges()) {
    adj[e.first][e.second]++;
    adj[e.second][e.first]++;
  }
  bool chain = g.is_connected();
  for (int v = 0; v < n && chain; ++v)
    if (adj[v].size() > 2) chain = false;
  int ends = 0;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() <= 1) ++ends;
  if (n > 1 && ends != 2) chain = false;
  if (chain) {
    // walk from one end
    int start = 0;
    for (int v = 0; v < n; ++v)
      if (adj[v].size() <= 1) {
        start = v;
        break;
      }
    std::string s = boxed_color(g.colors()[static_cast<size_t>(start)]);
    int prev = -1, cur = start;
    for (int step = 1; step < n; ++step) {
      int nxt = -1;
      for (const auto& [u, m] : adj[cur])
        if (u != prev) {
          nxt = u;
          break;
        }
      if (nxt < 0) break;
      s += "\\," + edge_symbol(adj[cur][nxt]) + "\\," + boxed_color(g.colors()[static_cast<size_t>(nxt)]);
      prev = cur;
      cur = nxt;
    }
    return s;
  }
  std::string s = "\\Gamma\\bigl[";
  for (int v = 0; v < n; ++v) {
    if (v) s += "\\,";
    s += boxed_color(g.colors()[static_cast<size_t>(v)]);
  }
  s += ";\\;";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.edges()[i].first) + std::to_string(g.edges()[i].second);
  }
  s += "\\bigr]";
  return s;
}

inline std::string wrap_document(const std::string& body) {
  return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n"
         "\\begin{align*}\n" +
         body + "\n\\end{align*}\n\\end{document}\n";
}

}  // namespace detail

inline std::string graph_series_to_latex(const GraphSeries& s, bool standalone = true) {
  std::string body;
  int per_line = 0;
  bool first = true;
  for (const auto& [g, c] : s.terms()) {
    if (per_line == 4) {
      body += "\\\\\n&";
      per_line = 0;
    }
    body += detail::latex_rational(c, first) + "\\," + detail::latex_graph(g) + " ";
    first = false;
    ++per_line;
  }
  if (body.empty()) body = "0";
  body = "&" + body;
  return standalone ? detail::wrap_document(body) : body;
}

inline std::string decoration_latex(int scale, int valence) {
  std::string nx = std::to_string(scale);
  if (valence == 0) return "f(" + nx + "h)";
  return "\\tfrac{" + nx + "}{4}\\,D^{" + std::to_string(valence - 1) + "}h(t^{" + nx + "})";
}

inline std::string trees_to_latex(const std::vector<DecoratedTree>& trees, bool standalone = true) {
  std::string body;
  int per_line = 0;
  bool first = true;
  for (const auto& t : trees) {
    if (per_line == 2) {
      body += "\\\\\n&";
      per_line = 0;
    }
    body += detail::latex_rational(t.coefficient, first) + "\\," + detail::latex_graph(t.tree);
    body += "\\;\\bigl[";
    for (size_t v = 0; v < t.vertices.size(); ++v) {
      if (v) body += ",\\,";
      body += decoration_latex(t.vertices[v].scale, t.vertices[v].valence);
    }
    body += "\\bigr] ";
    first = false;
    ++per_line;
  }
  if (body.empty()) body = "0";
  body = "&" + body;
  return standalone ? detail::wrap_document(body) : body;
}

}  // namespace bubbletree
