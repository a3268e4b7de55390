#include "arbor/functional.hpp"

#include <algorithm>
#include <mutex>

#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"

namespace arbor {

namespace {

// Multisets of trees with at least one edge and exactly n edges in total,
// components in nonincreasing order.
void edge_forests(std::size_t n, std::size_t max_edges, std::vector<Tree>& prefix, std::vector<Forest>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t e = std::min(n, max_edges); e >= 1; --e) {
    const auto& candidates = enumerate_trees(e, Grading::Edges);
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      if (!prefix.empty() && prefix.back() < *it) continue;
      prefix.push_back(*it);
      edge_forests(n - e, e, prefix, out);
      prefix.pop_back();
    }
  }
}

std::mutex g_basis_mutex;
std::map<std::pair<bool, std::size_t>, std::vector<Forest>> g_basis_by_degree;
std::map<std::pair<bool, std::size_t>, std::vector<Forest>> g_basis_up_to;

}  // namespace

std::string_view name(Kind k) {
  switch (k) {
    case Kind::Generic: return "generic";
    case Kind::Infinitesimal: return "infinitesimal";
    case Kind::Character: return "character";
  }
  return "?";
}

Grading grading_of(Algebra a) { return edge_graded(a) ? Grading::Edges : Grading::Vertices; }

const std::vector<Forest>& basis_of_degree(Algebra a, std::size_t d) {
  const std::pair key{edge_graded(a), d};
  {
    std::lock_guard lock(g_basis_mutex);
    if (auto it = g_basis_by_degree.find(key); it != g_basis_by_degree.end()) return it->second;
  }
  std::vector<Forest> out;
  if (edge_graded(a)) {
    if (d == 0) {
      out.push_back(Forest::bullet());
    } else {
      std::vector<Tree> prefix;
      edge_forests(d, d, prefix, out);
      std::sort(out.begin(), out.end());
    }
  } else {
    out = enumerate_forests(d);
  }
  std::lock_guard lock(g_basis_mutex);
  return g_basis_by_degree.emplace(key, std::move(out)).first->second;
}

const std::vector<Forest>& basis(Algebra a, std::size_t max_degree) {
  const std::pair key{edge_graded(a), max_degree};
  {
    std::lock_guard lock(g_basis_mutex);
    if (auto it = g_basis_up_to.find(key); it != g_basis_up_to.end()) return it->second;
  }
  std::vector<Forest> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto& grade = basis_of_degree(a, d);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  std::lock_guard lock(g_basis_mutex);
  return g_basis_up_to.emplace(key, std::move(out)).first->second;
}

Rational Functional::operator()(const Forest& raw) const {
  if (degree(raw) > max_degree_) {
    throw DomainError("forest " + raw.to_string() + " exceeds functional truncation degree " +
                      std::to_string(max_degree_));
  }
  const bool edges = grading_ == Grading::Edges;
  const Forest s = edges ? normalize(raw, Algebra::H) : raw;
  const bool is_unit = edges ? (s.size() == 1 && s.tree().is_bullet()) : s.is_empty();
  auto lookup = [&](const Forest& key) {
    auto it = values_.find(key);
    return it == values_.end() ? Rational(0) : it->second;
  };
  switch (kind_) {
    case Kind::Generic:
      return lookup(s);
    case Kind::Infinitesimal:
      return (!is_unit && s.size() == 1) ? lookup(s) : Rational(0);
    case Kind::Character: {
      if (is_unit) return 1;
      Rational product = 1;
      for (const auto& t : s.trees()) {
        product *= lookup(Forest(t));
        if (product == 0) break;
      }
      return product;
    }
  }
  return 0;
}

Rational Functional::operator()(const ForestSum& x) const {
  Rational total = 0;
  for (const auto& [f, c] : x.terms()) total += c * (*this)(f);
  return total;
}

void Functional::set(const Forest& raw, const Rational& value) {
  const bool edges = grading_ == Grading::Edges;
  const Forest s = edges ? normalize(raw, Algebra::H) : raw;
  if (kind_ != Kind::Generic) {
    if (s.size() != 1) throw DomainError("characters store values on single trees only");
    if (edges && s.tree().is_bullet()) {
      const Rational expected = kind_ == Kind::Character ? 1 : 0;
      if (value != expected) throw DomainError("value on the unit is fixed for this kind");
      return;
    }
  }
  if (value == 0) {
    values_.erase(s);
  } else {
    values_[s] = value;
  }
}

Functional Functional::truncated(std::size_t max_degree) const {
  Functional out(grading_, kind_, std::min(max_degree, max_degree_));
  for (const auto& [f, c] : values_) {
    if (degree(f) <= out.max_degree_) out.values_.emplace(f, c);
  }
  return out;
}

Functional character_from_tree_values(const std::map<Tree, Rational>& values, Algebra a, std::size_t max_degree) {
  Functional f(grading_of(a), Kind::Character, max_degree);
  for (const auto& [t, c] : values) {
    if (degree(Forest(t), a) > max_degree) continue;
    f.set(t, c);
  }
  for (const auto& s : basis(a, max_degree)) {
    if (!s.is_tree()) continue;
    const Tree& t = s.tree();
    if (edge_graded(a) && t.is_bullet()) continue;
    if (!values.contains(t)) throw DomainError("missing tree value for " + t.code());
  }
  return f;
}

Functional delta_basis(const Forest& raw, Algebra a, std::size_t max_degree) {
  const Forest s = normalize(raw, a);
  // In H~ the single vertex is grouplike, so dual basis elements are not primitive.
  const bool single_tree = s.is_tree() && s != unit(a) && a != Algebra::HTilde;
  Functional f(grading_of(a), single_tree ? Kind::Infinitesimal : Kind::Generic, max_degree);
  if (degree(s, a) <= max_degree) f.set(s, 1);
  return f;
}

Functional counit_functional(Algebra a, std::size_t max_degree) {
  Functional f(grading_of(a), Kind::Character, max_degree);
  // H~ is not connected: the single vertex is grouplike, so the counit is 1 there.
  if (a == Algebra::HTilde) f.set(Tree(), 1);
  return f;
}

Functional to_generic(const Functional& f, Algebra a) {
  Functional out(f.grading(), Kind::Generic, f.max_degree());
  for (const auto& s : basis(a, f.max_degree())) out.set(s, f(s));
  return out;
}

bool is_character(const Functional& f, Algebra a) {
  if (f(unit(a)) != 1) return false;
  for (const auto& s : basis(a, f.max_degree())) {
    if (s.size() < 2) continue;
    Rational product = 1;
    for (const auto& t : s.trees()) product *= f(Forest(t));
    if (f(s) != product) return false;
  }
  return true;
}

bool is_infinitesimal(const Functional& f, Algebra a) {
  if (f(unit(a)) != 0) return false;
  // f(t_1...t_n) = sum_i f(t_i) prod_{j != i} counit(t_j).
  for (const auto& s : basis(a, f.max_degree())) {
    if (s.size() < 2) continue;
    Rational expected = 0;
    const auto& trees = s.trees();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      Rational term = f(Forest(trees[i]));
      for (std::size_t j = 0; j < trees.size() && term != 0; ++j) {
        if (j != i) term *= counit(Forest(trees[j]), a);
      }
      expected += term;
    }
    if (f(s) != expected) return false;
  }
  return true;
}

Functional as_kind(const Functional& f, Kind kind, Algebra a) {
  if (kind == Kind::Generic) return to_generic(f, a);
  const bool ok = kind == Kind::Character ? is_character(f, a) : is_infinitesimal(f, a);
  if (!ok) throw DomainError(std::string("functional is not ") + std::string(name(kind)));
  Functional out(f.grading(), kind, f.max_degree());
  for (const auto& s : basis(a, f.max_degree())) {
    if (s.is_tree() && s != unit(a)) out.set(s, f(s));
  }
  return out;
}

bool equal_up_to(const Functional& f, const Functional& g, Algebra a, std::size_t max_degree) {
  for (const auto& s : basis(a, max_degree)) {
    if (f(s) != g(s)) return false;
  }
  return true;
}

}  // namespace arbor
