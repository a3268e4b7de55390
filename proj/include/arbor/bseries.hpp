#pragma once

#include <string>
#include <vector>

#include "arbor/functional.hpp"
#include "arbor/polynomial.hpp"
#include "arbor/report.hpp"

namespace arbor {

/// Polynomial vector field on d-space: d components, each a polynomial in
/// the d coordinates.
struct PolyVectorField {
  std::size_t dim = 1;
  std::vector<Poly> components;

  static PolyVectorField zero(std::size_t dim);
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;
};

/// Coordinate names: "y" for d = 1, "y1".."yd" otherwise.
std::vector<std::string> coordinate_names(std::size_t dim);

/// Parses one expression per component. For d = 1 both "y" and "y1" name the
/// coordinate.
PolyVectorField parse_field(std::size_t dim, const std::vector<std::string>& components);

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator*(const Rational& c, const PolyVectorField& a);

/// a ▷ b = sum_j a_j ∂_j b, componentwise.
PolyVectorField directional_derivative(const PolyVectorField& a, const PolyVectorField& b);

/// Truncated series sum_{k=0..order} h^k f_k with vector-field coefficients.
struct HSeriesField {
  std::size_t dim = 1;
  std::size_t order = 0;
  std::vector<PolyVectorField> coefficients;  // index = power of h

  static HSeriesField zero(std::size_t dim, std::size_t order);
  static HSeriesField constant(const PolyVectorField& a, std::size_t order);
  friend bool operator==(const HSeriesField&, const HSeriesField&) = default;
};

/// F_a(t), contracting the n-th derivative of a with the children's
/// elementary differentials.
PolyVectorField elementary_differential(const Tree& t, const PolyVectorField& a);

/// F_a(t) for a field depending on h, truncated at a's order.
HSeriesField elementary_differential(const Tree& t, const HSeriesField& a);

/// Linear extension over sums of trees.
PolyVectorField elementary_differential(const ForestSum& x, const PolyVectorField& a);

/// y -> sum_k h^k m_k(y), truncated at `order`.
struct BSeriesMap {
  std::size_t dim = 1;
  std::size_t order = 0;
  std::vector<std::vector<Poly>> coefficients;  // [power of h][component]

  static BSeriesMap zero(std::size_t dim, std::size_t order);
  /// Component i as one polynomial in y_1..y_d, h (h is the last variable).
  Poly component(std::size_t i) const;
  /// Map y -> other(this(y)), truncated.
  BSeriesMap then(const BSeriesMap& other) const;
  std::string to_string() const;
  friend bool operator==(const BSeriesMap&, const BSeriesMap&) = default;
};

/// α(∅) y + sum over trees with at most `order` vertices of
/// h^{v(t)} α(t)/σ(t) F_a(t). α must be vertex-graded and reach `order`.
BSeriesMap bseries_eval(const Functional& alpha, const PolyVectorField& a, std::size_t order);

/// (α ⋆ β)(t) = sum over spanning subforests s of t of α(s) β(t/s).
/// α is a character on vertex-graded forests; α(•) must be 1 unless
/// `allow_general_bullet`. The result has β's kind: a character if β is
/// one, otherwise an infinitesimal character determined by its tree values.
Functional substitute_coeffs(const Functional& alpha, const Functional& beta, bool allow_general_bullet = false);

/// α ∗ β over the CK coproduct: the coefficients of B(β) ∘ B(α).
Functional compose_coeffs(const Functional& alpha, const Functional& beta);

/// h⁻¹ B(α; a) with α(∅) ignored, truncated at h^{order-1}.
HSeriesField modified_field(const Functional& alpha, const PolyVectorField& a, std::size_t order);

/// B(β; h⁻¹B(α; a)) against B(α ⋆ β; a), compared polynomial-exactly.
Report verify_substitution(const PolyVectorField& a, const Functional& alpha, const Functional& beta,
                           std::size_t order, bool allow_general_bullet = false);

/// B(β; a) ∘ B(α; a) against B(α ∗ β; a).
Report verify_composition(const PolyVectorField& a, const Functional& alpha, const Functional& beta,
                          std::size_t order);

/// a = y², α(t) = 1/t!: the coefficient of h^n must be y^{n+1}.
Report verify_exact_flow(std::size_t order);

/// F_a(t ↷ u) = F_a(t) ▷ F_a(u) for every pair of trees with at most
/// `max_vertices` vertices in total.
Report verify_prelie_morphism(const PolyVectorField& a, std::size_t max_vertices);

}  // namespace arbor
