#include "arbor/json_io.hpp"

#include <fstream>

#include "arbor/errors.hpp"

namespace arbor {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const ForestSum& x) {
  json terms = json::array();
  for (const auto& [f, c] : x.terms()) terms.push_back({{"forest", f.to_string()}, {"coefficient", to_string(c)}});
  return {{"text", x.to_string()}, {"terms", terms}};
}

json to_json(const TensorSum& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    json factors = json::array();
    for (const auto& f : k) factors.push_back(f.to_string());
    terms.push_back({{"factors", factors}, {"coefficient", to_string(c)}});
  }
  return {{"arity", x.arity()}, {"text", x.to_string()}, {"terms", terms}};
}

json to_json(const Functional& f) {
  json values = json::object();
  for (const auto& [s, c] : f.stored()) values[s.to_string()] = to_string(c);
  return {{"grading", f.grading() == Grading::Edges ? "edges" : "vertices"},
          {"kind", std::string(name(f.kind()))},
          {"max_degree", f.max_degree()},
          {"values", values}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  return {{"ok", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw DomainError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

std::map<Tree, Rational> tree_values_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("tree values must be a JSON object");
  std::map<Tree, Rational> out;
  for (const auto& [key, value] : j.items()) {
    const Tree t = Tree::parse(key);
    if (!out.emplace(t, rational_from_json(value)).second) {
      throw DomainError("tree " + t.code() + " is given twice");
    }
  }
  return out;
}

std::map<Tree, Rational> tree_values_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
  return tree_values_from_json(j);
}

Functional functional_from_tree_values(const std::map<Tree, Rational>& values, Kind kind, std::size_t max_vertices) {
  if (kind == Kind::Generic) throw DomainError("tree values define characters or infinitesimal characters");
  Functional f(Grading::Vertices, kind, max_vertices);
  for (const auto& [t, c] : values) {
    if (t.vertices() <= max_vertices) f.set(t, c);
  }
  return f;
}

}  // namespace arbor
