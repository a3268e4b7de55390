#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// The forest algebras in play. H and HSigma share the edge-graded algebra
/// S(T') whose unit is the single vertex; HTilde and CK share the
/// vertex-graded algebra S(T) whose unit is the empty forest.
enum class Algebra { H, HSigma, HTilde, CK };

std::string_view name(Algebra a);
Algebra parse_algebra(std::string_view text);

constexpr bool edge_graded(Algebra a) { return a == Algebra::H || a == Algebra::HSigma; }

/// Degree of a forest in the grading of `a`.
std::size_t degree(const Forest& s, Algebra a);
/// Unit forest of `a`.
Forest unit(Algebra a);
/// In the edge-graded algebra single vertices are the unit: strip them.
Forest normalize(const Forest& s, Algebra a);
Forest multiply(const Forest& x, const Forest& y, Algebra a);

/// Finite rational linear combination of forests.
class ForestSum {
 public:
  using Map = std::map<Forest, Rational>;

  ForestSum() = default;
  ForestSum(const Forest& f, const Rational& c = 1) { add(f, c); }  // NOLINT

  void add(const Forest& f, const Rational& c);
  Rational coefficient(const Forest& f) const;
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  ForestSum& operator+=(const ForestSum& o);
  ForestSum& operator-=(const ForestSum& o);
  ForestSum& operator*=(const Rational& c);
  friend ForestSum operator+(ForestSum a, const ForestSum& b) { return a += b; }
  friend ForestSum operator-(ForestSum a, const ForestSum& b) { return a -= b; }
  friend ForestSum operator-(ForestSum a) { return a *= Rational(-1); }
  friend ForestSum operator*(ForestSum a, const Rational& c) { return a *= c; }
  friend ForestSum operator*(const Rational& c, ForestSum a) { return a *= c; }
  friend bool operator==(const ForestSum&, const ForestSum&) = default;

  /// Sum of all coefficients (the term count with multiplicity for
  /// nonnegative integer sums).
  Rational coefficient_sum() const;

  /// Human-readable form, e.g. "−[[[]]] + 2·[[]]·[[]]". The zero sum prints "0".
  std::string to_string() const;

 private:
  Map terms_;
};

/// Bilinear extension of the forest product of `a`.
ForestSum multiply(const ForestSum& x, const ForestSum& y, Algebra a = Algebra::CK);

/// Parses the output of ForestSum::to_string (also accepts "-" and "*").
ForestSum parse_forest_sum(std::string_view text);

/// Rational linear combination of n-fold tensor products of forests.
class TensorSum {
 public:
  using Key = std::vector<Forest>;
  using Map = std::map<Key, Rational>;

  explicit TensorSum(std::size_t arity = 2) : arity_(arity) {}

  std::size_t arity() const noexcept { return arity_; }
  void add(const Key& k, const Rational& c);
  Rational coefficient(const Key& k) const;
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient_sum() const;

  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  TensorSum& operator*=(const Rational& c);
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend bool operator==(const TensorSum&, const TensorSum&) = default;

  /// Slot-wise product; slot i multiplies in algebra slots[i].
  static TensorSum multiply(const TensorSum& x, const TensorSum& y, std::span<const Algebra> slots);

  /// Terms rendered as "c·a⊗b", sorted canonically.
  std::string to_string() const;

 private:
  std::size_t arity_;
  Map terms_;
};

TensorSum tensor(const ForestSum& x, const ForestSum& y);

}  // namespace arbor

namespace arbor {

/// a∘b + b∘a + a×b (Butcher products both ways plus the root merge).
ForestSum bowtie(const Tree& a, const Tree& b);

}  // namespace arbor
