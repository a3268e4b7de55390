#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "arbor/functional.hpp"
#include "arbor/report.hpp"

namespace arbor {

/// Rationals are written as "p/q" (or "p") strings.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const ForestSum& x);
nlohmann::json to_json(const TensorSum& x);
nlohmann::json to_json(const Functional& f);
nlohmann::json to_json(const Report& r);

/// Accepts a string "p/q" or a JSON integer.
Rational rational_from_json(const nlohmann::json& j);

/// Object mapping tree strings to rationals, e.g. {"[]": "1", "[[]]": "1/2"}.
/// Tree strings are canonicalized on the way in.
std::map<Tree, Rational> tree_values_from_json(const nlohmann::json& j);

/// Reads a file holding such an object. Throws DomainError on I/O or format
/// problems.
std::map<Tree, Rational> tree_values_from_file(const std::string& path);

/// Vertex-graded functional with the given tree values up to max_vertices;
/// trees missing from the map get zero. Characters take value 1 on ∅.
Functional functional_from_tree_values(const std::map<Tree, Rational>& values, Kind kind,
                                       std::size_t max_vertices);

}  // namespace arbor
