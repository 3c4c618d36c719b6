#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bubbletree/graph_series.hpp"
#include "bubbletree/laurent.hpp"
#include "bubbletree/rational_function.hpp"
#include "bubbletree/torus.hpp"

namespace bubbletree {

using nlohmann::json;

inline long checked_long(const BigInt& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::range_error("json: integer coefficient does not fit in 64 bits");
  return static_cast<long>(v);
}

inline json to_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (int e = s.min_exp(); e <= s.order(); ++e) coeffs.push_back(to_fraction_string(s.coeff(e)));
  return json{{"var", s.var()}, {"min_exp", s.min_exp()}, {"coeffs", coeffs}, {"order", s.order()}};
}

inline LaurentSeries laurent_from_json(const json& j) {
  std::vector<Rational> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(rational_from_string(c.get<std::string>()));
  return LaurentSeries(j.at("var").get<std::string>(), j.at("min_exp").get<int>(), std::move(cs),
                       j.at("order").get<int>());
}

inline json to_json(const RationalFunction& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num().coefficients()) num.push_back(checked_long(c));
  for (const auto& c : f.den().coefficients()) den.push_back(checked_long(c));
  return json{{"num", num}, {"den", den}};
}

inline RationalFunction rational_function_from_json(const json& j) {
  std::vector<BigInt> num, den;
  for (const auto& c : j.at("num")) num.emplace_back(c.get<long>());
  for (const auto& c : j.at("den")) den.emplace_back(c.get<long>());
  return RationalFunction(IntPoly(std::move(num)), IntPoly(std::move(den)));
}

inline json to_json(const ColoredMultigraph& g) {
  json colors = json::array(), edges = json::array();
  for (const auto& c : g.colors()) colors.push_back(c);
  for (const auto& e : g.edges()) edges.push_back(json::array({e.first, e.second}));
  return json{{"colors", colors}, {"edges", edges}};
}

inline ColoredMultigraph graph_from_json(const json& j) {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  for (const auto& c : j.at("colors")) colors.push_back(c.get<std::string>());
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return ColoredMultigraph::canonical(std::move(colors), std::move(edges));
}

inline json to_json(const GraphSeries& s) {
  json terms = json::array();
  for (const auto& [g, c] : s.terms())
    terms.push_back(json{{"graph", to_json(g)}, {"coeff", to_fraction_string(c)}});
  return terms;
}

inline GraphSeries graph_series_from_json(const json& j, int edge_limit) {
  GraphSeries s(edge_limit);
  for (const auto& t : j) s.add(graph_from_json(t.at("graph")), rational_from_string(t.at("coeff").get<std::string>()));
  return s;
}

inline std::string scale_tag(int scale, const TorusParams& params) {
  if (scale == params.p) return "p";
  if (scale == params.q) return "q";
  if (scale == params.p * params.q) return "pq";
  throw std::invalid_argument("json: scale " + std::to_string(scale) + " is not p, q or pq");
}

inline std::string decoration_tag(int valence) {
  if (valence == 0) return "f";
  return "D" + std::to_string(valence - 1) + "_h";
}

inline json to_json(const DecoratedTree& t, const TorusParams& params) {
  json vertices = json::array();
  for (const auto& v : t.vertices)
    vertices.push_back(json{{"scale", scale_tag(v.scale, params)},
                            {"valence", v.valence},
                            {"decoration", decoration_tag(v.valence)}});
  return json{{"tree", to_json(t.tree)},
              {"coeff", to_fraction_string(t.coefficient)},
              {"vertices", vertices}};
}

}  // namespace bubbletree
