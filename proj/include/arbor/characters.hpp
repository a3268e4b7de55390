#pragma once

#include <string_view>

#include "arbor/functional.hpp"
#include "arbor/hopf.hpp"
#include "arbor/report.hpp"

namespace arbor {

struct ConvolutionContext {
  Algebra algebra = Algebra::CK;
  std::size_t max_degree = 5;
};

/// f * g = m o (f (x) g) o Delta. The result is truncated at the smallest of
/// the three degrees. Two characters convolve to a character (computed on
/// trees only); anything else yields a generic table over the whole basis.
Functional convolve(const Functional& f, const Functional& g, const ConvolutionContext& ctx);

/// Convolution unit of the context.
Functional convolution_unit(const ConvolutionContext& ctx);

/// Truncated exponential and logarithm. exp needs f(unit) = 0, log needs
/// g(unit) = 1. Both reject Htilde.
Functional exp_star(const Functional& f, const ConvolutionContext& ctx);
Functional log_star(const Functional& g, const ConvolutionContext& ctx);

/// Inverse for the convolution, by the geometric series; needs f(unit) != 0.
Functional inverse_star(const Functional& f, const ConvolutionContext& ctx);

/// f o S for a character f; returns a character.
Functional precompose_antipode(const Functional& f, Algebra a);

enum class NamedCharacter { E, ESigma, L, LSigma, Delta, Eps, DeltaBullet };

std::string_view name(NamedCharacter c);
NamedCharacter parse_named_character(std::string_view text);

/// Algebra on which the named character lives: H for E, E_sigma, L, L_sigma;
/// CK for delta, eps, delta_bullet.
Algebra home_algebra(NamedCharacter c);

/// Value on one tree, computed without building a table:
/// E(t) = 1/t!, E_sigma(t) = 1/(t! sigma(t)), L = E o S, L_sigma = E_sigma o S_sigma.
Rational named_value(NamedCharacter c, const Tree& t);

/// Table of the named character up to max_degree (edges for H, vertices for CK).
Functional named_character(NamedCharacter c, std::size_t max_degree);

/// Which algebra coacts on CK: H (edge-graded) or Htilde (vertex-graded).
enum class CoactionFlavor { H, HTilde };

/// Phi : CK -> H (x) CK and Psi : CK -> CK (x) H, algebra morphisms equal to
/// the H (or Htilde) coproduct on nonempty trees.
TensorSum coaction_phi(const Forest& x, CoactionFlavor flavor = CoactionFlavor::H);
TensorSum coaction_psi(const Forest& x, CoactionFlavor flavor = CoactionFlavor::H);

/// Flavor implied by the grading of a functional on H or Htilde.
CoactionFlavor flavor_of(const Functional& a);

/// sum <a, x_1> x_0 over Phi(x).
ForestSum t_L(const Functional& a, const Forest& x);
ForestSum t_L(const Functional& a, const ForestSum& x);
/// sum x'_0 <a, x'_1> over Psi(x).
ForestSum t_R(const Functional& a, const Forest& x);

enum class Side { Left, Right };

/// Left: (a * b)(x) = sum a(x_1) b(x_0) over Phi(x).
/// Right: (b * a)(x) = sum b(x'_0) a(x'_1) over Psi(x).
/// The result is a generic table on CK up to b's truncation degree.
Functional star_action(const Functional& a, const Functional& b, Side side);

enum class CorrespondenceMode { Infinitesimal, Character };

/// phi * delta_bullet (infinitesimal) or phi * delta (character) for a
/// character phi of H or Htilde. Throws DomainError if phi is not a character.
Functional correspond(const Functional& phi, CorrespondenceMode mode, std::size_t max_vertices);

/// The character of H agreeing with a CK character on trees with edges.
Functional restrict_to_h(const Functional& b, std::size_t max_edges);

/// omega on CK up to max_vertices, computed as L * delta_bullet and as
/// log(delta); throws InternalMismatch if the two disagree.
Functional omega(std::size_t max_vertices);

/// Checks (id (x) Delta_CK) Phi = m13 (Phi (x) Phi) Delta_CK on every forest up
/// to max_edges + 1 vertices, and the matching identity for the transposed action of the dual
/// basis elements Z_t of trees with at most max_edges edges.
Report verify_coaction_compatibility(std::size_t max_edges, CoactionFlavor flavor = CoactionFlavor::H);

}  // namespace arbor
