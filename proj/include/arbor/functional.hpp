#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "arbor/linear.hpp"

namespace arbor {

enum class Kind { Generic, Infinitesimal, Character };

std::string_view name(Kind k);

/// Degree-truncated linear form on the forest basis.
///
/// Characters and infinitesimal characters store values on single trees
/// only; their values on forests follow from multiplicativity or from
/// vanishing on products. Generic functionals store one value per forest.
/// In the vertex grading a character also stores its value on the single
/// vertex, which is free for the bialgebra H~ and for CK. The Infinitesimal
/// kind vanishes on every product, which is the H and CK notion; H~
/// infinitesimal characters do not vanish on t·• and are kept as generic
/// tables.
class Functional {
 public:
  Functional(Grading grading, Kind kind, std::size_t max_degree)
      : grading_(grading), kind_(kind), max_degree_(max_degree) {}

  Grading grading() const noexcept { return grading_; }
  Kind kind() const noexcept { return kind_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Degree of a forest in this functional's grading.
  std::size_t degree(const Forest& s) const noexcept {
    return grading_ == Grading::Edges ? s.edges() : s.vertices();
  }

  /// Value on a basis forest. Throws DomainError above max_degree.
  Rational operator()(const Forest& s) const;
  Rational operator()(const Tree& t) const { return (*this)(Forest(t)); }
  /// Linear extension.
  Rational operator()(const ForestSum& x) const;

  /// Stores a value. For (infinitesimal) characters the key must be a tree.
  void set(const Forest& s, const Rational& value);
  void set(const Tree& t, const Rational& value) { set(Forest(t), value); }

  /// Stored values (trees for characters, forests otherwise).
  const std::map<Forest, Rational>& stored() const noexcept { return values_; }

  /// Same functional with a smaller truncation degree.
  Functional truncated(std::size_t max_degree) const;

 private:
  Grading grading_;
  Kind kind_;
  std::size_t max_degree_;
  std::map<Forest, Rational> values_;
};

/// Every basis forest of `a` with degree at most `max_degree`, in canonical order.
/// Edge-graded bases start with the single vertex (the unit).
const std::vector<Forest>& basis(Algebra a, std::size_t max_degree);

/// Basis forests of exactly the given degree.
const std::vector<Forest>& basis_of_degree(Algebra a, std::size_t degree);

Grading grading_of(Algebra a);

/// Multiplicative extension of tree values. Requires a value for every tree
/// within range (trees with at least one edge for H; every tree otherwise).
/// For H the single vertex is the unit and must be absent or equal to one.
Functional character_from_tree_values(const std::map<Tree, Rational>& values, Algebra a,
                                      std::size_t max_degree);

/// Dual basis element at s: Z_s (edge-graded) or delta_s (vertex-graded).
/// Single trees other than the unit give infinitesimal characters, except in
/// H~ where the dual basis is returned as a generic table.
Functional delta_basis(const Forest& s, Algebra a, std::size_t max_degree);

/// Counit of `a` as a character: the convolution unit e.
Functional counit_functional(Algebra a, std::size_t max_degree);

/// Explicit table of values on every basis forest up to max_degree.
Functional to_generic(const Functional& f, Algebra a);

/// Checks the defining property on every basis forest within range.
bool is_character(const Functional& f, Algebra a);
bool is_infinitesimal(const Functional& f, Algebra a);

/// Re-tags a functional after checking the property on the whole basis;
/// throws DomainError if it does not hold.
Functional as_kind(const Functional& f, Kind kind, Algebra a);

/// Agreement on every basis forest of degree <= max_degree.
bool equal_up_to(const Functional& f, const Functional& g, Algebra a, std::size_t max_degree);

}  // namespace arbor
