#pragma once

#include <cstddef>

#include "arbor/linear.hpp"

namespace arbor {

/// Coproduct of a forest in the given algebra, extended multiplicatively.
///
///  - H:      sum over subforests s (edge subsets) of s (x) t/s; the empty
///            subset contributes the unit (the single vertex) on the left.
///  - HSigma: same terms weighted by sigma(s) sigma(t/s) / sigma(t).
///  - HTilde: spanning subforests, isolated vertices kept as single-vertex
///            factors on the left.
///  - CK:     admissible cuts, pruning (x) trunk.
///
/// For H and HSigma the forest may not contain single-vertex components
/// besides the unit itself.
TensorSum coproduct(const Forest& s, Algebra a);

/// Coproduct of a single tree; memoized per algebra and canonical code.
const TensorSum& tree_coproduct(const Tree& t, Algebra a);

/// Linear extension of the coproduct.
TensorSum coproduct(const ForestSum& x, Algebra a);

/// Coproduct minus the two unit-bearing terms s (x) 1 and 1 (x) s. Zero on the
/// unit. Rejects HTilde, which is not connected.
TensorSum reduced_coproduct(const Forest& s, Algebra a);

/// Applies the (reduced) coproduct n times, always to the last tensor slot;
/// the result has n + 1 slots.
TensorSum iterated_coproduct(const Forest& s, Algebra a, std::size_t n, bool reduced);

/// Applies the coproduct to one slot of every term, widening the tensor by one.
TensorSum apply_coproduct_at(const TensorSum& x, std::size_t slot, Algebra a, bool reduced = false);

/// Counit: 1 on the unit (and on every all-vertex forest for HTilde), 0 otherwise.
Rational counit(const Forest& s, Algebra a);

enum class AntipodeMethod {
  Recursive,       ///< S(t) = -t - sum s S(t/s) over proper nontrivial subforests
  RecursiveLeft,   ///< S(t) = -t - sum S(s) t/s
  ClosedForm,      ///< sum over ordered partitions of the edge set (H and HSigma only)
};

/// Antipode, multiplicatively extended. Throws DomainError for HTilde (no
/// antipode exists) and for the closed form on CK.
ForestSum antipode(const Forest& s, Algebra a, AntipodeMethod method = AntipodeMethod::Recursive);
ForestSum antipode(const ForestSum& x, Algebra a, AntipodeMethod method = AntipodeMethod::Recursive);

/// A_sigma: s -> sigma(s) s, and its inverse.
ForestSum sigma_scale(const ForestSum& x, bool inverse = false);

/// Closed-form oracles for the edge-graded coproduct.
/// Corolla: sum_p binom(n, p) C_p (x) C_{n-p}, or without the binomial
/// weights when `sigma_normalized` is set.
TensorSum corolla_coproduct(std::size_t n, bool sigma_normalized = false);
/// Ladder: mock-compositions (p_1 >= 0, the rest >= 1) of n; odd-ranked
/// parts form the left factor, even-ranked parts sum to the right ladder.
TensorSum ladder_coproduct(std::size_t n);
/// Floored-tree expansion: floor functions on edges starting at 0 or 1 on
/// root edges and rising by at most one per edge along every path.
/// Odd-ranked floors form the left factor.
TensorSum floored_coproduct(const Tree& t);
/// Number of floor functions on t counted by floored_coproduct.
std::size_t floored_tree_count(const Tree& t);

/// Corolla antipode from its closed composition formula:
/// S(C_n) = sum_r (-1)^r sum_{k_1+...+k_r=n} n!/(k_1!...k_r!) C_{k_1}...C_{k_r}
/// (or with unit weights when `sigma_normalized`).
ForestSum corolla_antipode(std::size_t n, bool sigma_normalized = false);

/// B+ extended linearly to forest sums.
ForestSum b_plus(const ForestSum& x);

}  // namespace arbor
