#pragma once

#include <functional>

#include "arbor/linear.hpp"

namespace arbor {

/// Insertion t ▷ u = sum_v N(t,u,v) v with N read off as the coefficient of
/// t ⊗ u in the H coproduct of every tree v with e(t) + e(u) edges.
/// `normalized` gives ▷_sigma with M = sigma(t) sigma(u) / sigma(v) N.
ForestSum insert(const Tree& t, const Tree& u, bool normalized = false);

/// Grafting. `normalized` gives t ↷ u: one term per vertex of u, obtained by
/// attaching the root of t under it. Otherwise t → u, whose coefficients are
/// sigma(v) / (sigma(t) sigma(u)) times the attachment counts.
ForestSum graft(const Tree& t, const Tree& u, bool normalized = false);

/// t → u computed from the coefficient of t ⊗ u in the CK coproduct of every
/// tree with v(t) + v(u) vertices; an independent route to graft(t, u, false).
ForestSum graft_by_cuts(const Tree& t, const Tree& u);

using TreeProduct = std::function<ForestSum(const Tree&, const Tree&)>;

/// Bilinear extension of a product of trees to sums of trees.
ForestSum apply_product(const TreeProduct& product, const ForestSum& x, const ForestSum& y);

/// (x▷y)▷z − x▷(y▷z) − (y▷x)▷z + y▷(x▷z); zero for a left pre-Lie product.
ForestSum prelie_defect(const TreeProduct& product, const Tree& x, const Tree& y, const Tree& z);

/// Bernoulli numbers B_0..B_n with B_1 = −1/2.
std::vector<Rational> bernoulli_numbers(std::size_t n);

/// Pre-Lie Magnus element: the fixed point of
/// Ω' = sum_n B_n/n! L^n[Ω'](•) with L[a](b) = a ↷ b, truncated at
/// max_vertices vertices.
ForestSum magnus_omega(std::size_t max_vertices);

}  // namespace arbor
