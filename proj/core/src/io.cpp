#include "daggerhom/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace daggerhom {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Element element_from_json(const Group& g, const json& j) {
  if (j.is_string()) return g.parse_element(j.get<std::string>());
  if (j.is_number_integer()) return g.from_letters({j.get<int32_t>()});
  if (j.is_array()) {
    std::vector<int32_t> coords;
    for (const auto& c : j) coords.push_back(c.get<int32_t>());
    return g.from_letters(coords);
  }
  throw std::invalid_argument("element encoding must be a string, integer or array");
}

json element_to_json_value(const Group& g, const Element& e) {
  switch (g.kind()) {
    case GroupKind::Free:
      return g.format(e);
    case GroupKind::FreeAbelian: {
      json arr = json::array();
      for (auto c : e.v) arr.push_back(c);
      return arr;
    }
    case GroupKind::Finite:
      return e.v[0];
  }
  return json();
}

}  // namespace

AlgebraElement parse_element_json(const std::string& text) {
  json j = json::parse(text);
  Group g = Group::parse_spec(j.at("group").get<std::string>());
  std::optional<Cocycle> twist;
  if (j.contains("lambda"))
    twist = Cocycle{parse_rational(j["lambda"].get<std::string>())};
  AlgebraElement e(g, twist);
  for (const auto& term : j.at("terms")) {
    e.add_term(element_from_json(g, term.at("g")),
               parse_rational(term.at("coeff").get<std::string>()));
  }
  return e;
}

AlgebraElement load_element_file(const std::string& path) {
  return parse_element_json(slurp(path));
}

std::string element_to_json(const AlgebraElement& e) {
  json j;
  j["group"] = e.group().spec();
  if (e.twist()) j["lambda"] = format_rational(e.twist()->lambda);
  json terms = json::array();
  for (const auto& [g, c] : e.terms()) {
    json t;
    t["g"] = element_to_json_value(e.group(), g);
    t["coeff"] = format_rational(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

BarChain parse_chain_json(const std::string& text) {
  json j = json::parse(text);
  Group g = Group::parse_spec(j.at("group").get<std::string>());
  BarChain ch(g, j.at("degree").get<int>(), j.at("reduced").get<bool>());
  for (const auto& term : j.at("terms")) {
    Tuple t;
    for (const auto& el : term.at("tuple")) t.push_back(element_from_json(g, el));
    ch.add_term(t, parse_rational(term.at("coeff").get<std::string>()));
  }
  return ch;
}

BarChain load_chain_file(const std::string& path) { return parse_chain_json(slurp(path)); }

std::string chain_to_json(const BarChain& ch) {
  json j;
  j["group"] = ch.group().spec();
  j["degree"] = ch.degree();
  j["reduced"] = ch.reduced();
  json terms = json::array();
  for (const auto& [t, c] : ch.terms()) {
    json term;
    json tuple = json::array();
    for (const Element& e : t) tuple.push_back(element_to_json_value(ch.group(), e));
    term["tuple"] = tuple;
    term["coeff"] = format_rational(c);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j.dump();
}

TowerSpec parse_tower_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("tower file must be a JSON array");
  TowerSpec spec;
  for (std::size_t i = 0; i < j.size(); ++i) {
    TowerLevel lev{Group::parse_spec(j[i].at("group").get<std::string>()), {}};
    if (i > 0) lev.generator_images = j[i].at("generator_images").get<std::vector<int>>();
    spec.levels.push_back(std::move(lev));
  }
  return spec;
}

TowerSpec load_tower_file(const std::string& path) { return parse_tower_json(slurp(path)); }

}  // namespace daggerhom
