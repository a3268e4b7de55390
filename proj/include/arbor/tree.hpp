#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/// Non-planar rooted tree held in canonical form.
///
/// The encoding is "[" followed by the encodings of the children and "]",
/// with children sorted by (length, lexicographic) order of their own
/// encodings. Isomorphic trees therefore have identical encodings, and the
/// encoding doubles as the ordering and hashing key.
class Tree {
 public:
  /// The single-vertex tree.
  Tree() : code_("[]") {}

  /// B+ of the given children: a new root with each child grafted on it.
  static Tree graft(std::vector<Tree> children);

  /// Parses a single tree. Accepts "[]" or "()" brackets and "•" for a leaf.
  static Tree parse(std::string_view text);

  const std::string& code() const noexcept { return code_; }
  std::vector<Tree> children() const;

  std::size_t vertices() const noexcept { return code_.size() / 2; }
  std::size_t edges() const noexcept { return vertices() - 1; }
  bool is_bullet() const noexcept { return code_.size() == 2; }

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) noexcept {
    if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
    return a.code_.compare(b.code_) <=> 0;
  }
  friend bool operator==(const Tree& a, const Tree& b) noexcept = default;

 private:
  explicit Tree(std::string canonical) : code_(std::move(canonical)) {}
  std::string code_;
};

/// Commutative product of trees, stored as a sorted list. The empty forest is
/// the unit of the Connes-Kreimer algebra; the single-vertex forest plays the
/// unit role in the edge-graded algebra.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  Forest(const Tree& tree) : trees_{tree} {}  // NOLINT: a tree is a one-component forest

  static Forest empty() { return Forest(); }
  static Forest bullet() { return Forest(Tree()); }
  /// n copies of the single-vertex tree.
  static Forest bullets(std::size_t n);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  std::size_t size() const noexcept { return trees_.size(); }
  bool is_empty() const noexcept { return trees_.empty(); }
  bool is_tree() const noexcept { return trees_.size() == 1; }
  const Tree& tree() const;  // requires is_tree()

  std::size_t vertices() const noexcept;
  std::size_t edges() const noexcept;
  /// True when every component is the single-vertex tree (also for the empty forest).
  bool all_bullets() const noexcept;

  /// Multiset union.
  friend Forest operator*(const Forest& a, const Forest& b);

  /// Canonical string: components joined with "·", or "∅" for the empty forest.
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept;
  friend bool operator==(const Forest& a, const Forest& b) noexcept = default;

 private:
  std::vector<Tree> trees_;
};

/// Parses a forest: trees separated by "·" or ".", or "∅" / "empty" for the
/// empty forest. Throws ParseError with the byte offset of the problem.
Forest parse_forest(std::string_view text);

enum class Grading { Vertices, Edges };

/// All isomorphism classes of trees with exactly n vertices (or n edges), in
/// canonical order.
const std::vector<Tree>& enumerate_trees(std::size_t n, Grading grading = Grading::Vertices);

/// All trees with between 1 and max_vertices vertices, grade by grade.
std::vector<Tree> trees_up_to(std::size_t max_vertices);

/// Multisets of trees with exactly n vertices in total, in canonical order.
const std::vector<Forest>& enumerate_forests(std::size_t n);

struct TreeStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Integer sigma = 1;      ///< product of automorphism group orders of the components
  Integer factorial = 1;  ///< tree factorial, multiplicative over components
  Rational cm = 1;        ///< v! / (factorial * sigma)
};

TreeStats stats(const Forest& s);
Integer symmetry(const Tree& t);
Integer symmetry(const Forest& s);
Integer tree_factorial(const Tree& t);
Integer tree_factorial(const Forest& s);

/// Grafts every component on a common new root. B+(∅) is the single vertex.
Tree b_plus(const Forest& s);
/// Grafts b onto the root of a.
Tree butcher(const Tree& a, const Tree& b);
/// Identifies the roots of a and b.
Tree merge(const Tree& a, const Tree& b);

/// Ladder with n edges and corolla with n leaves.
Tree ladder(std::size_t edges);
Tree corolla(std::size_t leaves);

}  // namespace arbor

template <>
struct std::hash<arbor::Tree> {
  std::size_t operator()(const arbor::Tree& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};

template <>
struct std::hash<arbor::Forest> {
  std::size_t operator()(const arbor::Forest& f) const noexcept {
    std::size_t h = f.size();
    for (const auto& t : f.trees()) h = h * 1000003u ^ std::hash<arbor::Tree>{}(t);
    return h;
  }
};
