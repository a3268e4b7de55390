#include "arbor/characters.hpp"

#include <algorithm>
#include <array>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

template <class Value>
Functional table(Algebra a, std::size_t max_degree, Value&& value) {
  Functional out(grading_of(a), Kind::Generic, max_degree);
  for (const auto& s : basis(a, max_degree)) out.set(s, value(s));
  return out;
}

void require_grading(const Functional& f, Algebra a) {
  if (f.grading() != grading_of(a)) {
    throw DomainError(std::string("functional grading does not match algebra ") + std::string(name(a)));
  }
}

Algebra coacting_algebra(CoactionFlavor flavor) {
  return flavor == CoactionFlavor::H ? Algebra::H : Algebra::HTilde;
}

Rational evaluate_on(const Functional& f, const TensorSum& coproduct_terms, const Functional& g) {
  Rational total = 0;
  for (const auto& [k, c] : coproduct_terms.terms()) {
    const Rational fv = f(k[0]);
    if (fv == 0) continue;
    total += c * fv * g(k[1]);
  }
  return total;
}

}  // namespace

Functional convolve(const Functional& f, const Functional& g, const ConvolutionContext& ctx) {
  const Algebra a = ctx.algebra;
  require_grading(f, a);
  require_grading(g, a);
  const std::size_t d = std::min({ctx.max_degree, f.max_degree(), g.max_degree()});
  auto value = [&](const Forest& s) -> Rational { return evaluate_on(f, coproduct(s, a), g); };
  if (f.kind() == Kind::Character && g.kind() == Kind::Character) {
    Functional out(grading_of(a), Kind::Character, d);
    for (const auto& s : basis(a, d)) {
      if (s.is_tree() && s != unit(a)) out.set(s, value(s));
    }
    return out;
  }
  return table(a, d, value);
}

Functional convolution_unit(const ConvolutionContext& ctx) { return counit_functional(ctx.algebra, ctx.max_degree); }

Functional exp_star(const Functional& f, const ConvolutionContext& ctx) {
  const Algebra a = ctx.algebra;
  if (a == Algebra::HTilde) throw DomainError("exp is only defined on connected Hopf algebras (H or CK)");
  require_grading(f, a);
  if (f(unit(a)) != 0) throw DomainError("exp needs a functional vanishing on the unit");
  const std::size_t d = std::min(ctx.max_degree, f.max_degree());
  const ConvolutionContext c{a, d};
  Functional power = to_generic(convolution_unit(c), a);
  std::vector<Functional> powers;
  for (std::size_t k = 1; k <= d; ++k) {
    power = convolve(power, f, c);
    powers.push_back(power);
  }
  return table(a, d, [&](const Forest& s) -> Rational {
    Rational total = counit(s, a);
    Rational inv_factorial = 1;
    for (std::size_t k = 1; k <= powers.size(); ++k) {
      inv_factorial /= static_cast<long>(k);
      total += inv_factorial * powers[k - 1](s);
    }
    return total;
  });
}

Functional log_star(const Functional& g, const ConvolutionContext& ctx) {
  const Algebra a = ctx.algebra;
  if (a == Algebra::HTilde) throw DomainError("log is only defined on connected Hopf algebras (H or CK)");
  require_grading(g, a);
  if (g(unit(a)) != 1) throw DomainError("log needs a functional equal to 1 on the unit");
  const std::size_t d = std::min(ctx.max_degree, g.max_degree());
  const ConvolutionContext c{a, d};
  const Functional shifted = table(a, d, [&](const Forest& s) -> Rational { return g(s) - counit(s, a); });
  std::vector<Functional> powers{shifted};
  for (std::size_t k = 2; k <= d; ++k) powers.push_back(convolve(powers.back(), shifted, c));
  return table(a, d, [&](const Forest& s) -> Rational {
    Rational total = 0;
    for (std::size_t k = 1; k <= powers.size(); ++k) {
      const Rational weight = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
      total += weight * powers[k - 1](s);
    }
    return total;
  });
}

Functional inverse_star(const Functional& f, const ConvolutionContext& ctx) {
  const Algebra a = ctx.algebra;
  require_grading(f, a);
  const Rational f0 = f(unit(a));
  if (f0 == 0) throw DomainError("functional vanishing on the unit is not invertible");
  const std::size_t d = std::min(ctx.max_degree, f.max_degree());
  const ConvolutionContext c{a, d};
  // f = f0 (e - h), so f^{-1} = f0^{-1} sum_k h^k.
  const Functional h = table(a, d, [&](const Forest& s) -> Rational { return counit(s, a) - f(s) / f0; });
  if (a == Algebra::HTilde && h(Forest::bullet()) != 0) {
    throw DomainError("Htilde functional is not invertible unless its value on the single vertex matches the unit");
  }
  std::vector<Functional> powers{h};
  for (std::size_t k = 2; k <= d; ++k) powers.push_back(convolve(powers.back(), h, c));
  return table(a, d, [&](const Forest& s) -> Rational {
    Rational total = counit(s, a);
    for (const auto& p : powers) total += p(s);
    return Rational(total / f0);
  });
}

Functional precompose_antipode(const Functional& f, Algebra a) {
  if (f.kind() != Kind::Character) throw DomainError("precompose_antipode needs a character");
  require_grading(f, a);
  Functional out(f.grading(), Kind::Character, f.max_degree());
  for (const auto& s : basis(a, f.max_degree())) {
    if (s.is_tree() && s != unit(a)) out.set(s, f(antipode(s, a)));
  }
  return out;
}

std::string_view name(NamedCharacter c) {
  switch (c) {
    case NamedCharacter::E: return "E";
    case NamedCharacter::ESigma: return "E_sigma";
    case NamedCharacter::L: return "L";
    case NamedCharacter::LSigma: return "L_sigma";
    case NamedCharacter::Delta: return "delta";
    case NamedCharacter::Eps: return "eps";
    case NamedCharacter::DeltaBullet: return "delta_bullet";
  }
  return "?";
}

NamedCharacter parse_named_character(std::string_view text) {
  for (auto c : {NamedCharacter::E, NamedCharacter::ESigma, NamedCharacter::L, NamedCharacter::LSigma,
                 NamedCharacter::Delta, NamedCharacter::Eps, NamedCharacter::DeltaBullet}) {
    if (text == name(c)) return c;
  }
  throw DomainError("unknown character '" + std::string(text) +
                    "' (expected E, E_sigma, L, L_sigma, delta, eps or delta_bullet)");
}

Algebra home_algebra(NamedCharacter c) {
  switch (c) {
    case NamedCharacter::E:
    case NamedCharacter::ESigma:
    case NamedCharacter::L:
    case NamedCharacter::LSigma:
      return Algebra::H;
    default:
      return Algebra::CK;
  }
}

Rational named_value(NamedCharacter c, const Tree& t) {
  auto e_of = [](const Forest& s) -> Rational { return Rational(1) / Rational(tree_factorial(s)); };
  auto e_sigma_of = [](const Forest& s) -> Rational { return Rational(1) / Rational(tree_factorial(s) * symmetry(s)); };
  switch (c) {
    case NamedCharacter::E:
      return e_of(t);
    case NamedCharacter::ESigma:
      return e_sigma_of(t);
    case NamedCharacter::L: {
      Rational total = 0;
      for (const auto sum = antipode(Forest(t), Algebra::H); const auto& [f, k] : sum.terms()) total += k * e_of(f);
      return total;
    }
    case NamedCharacter::LSigma: {
      Rational total = 0;
      for (const auto sum = antipode(Forest(t), Algebra::HSigma); const auto& [f, k] : sum.terms()) total += k * e_sigma_of(f);
      return total;
    }
    case NamedCharacter::Delta:
    case NamedCharacter::DeltaBullet:
      return t.is_bullet() ? 1 : 0;
    case NamedCharacter::Eps:
      return 0;
  }
  return 0;
}

Functional named_character(NamedCharacter c, std::size_t max_degree) {
  const Algebra a = home_algebra(c);
  if (c == NamedCharacter::DeltaBullet) return delta_basis(Forest::bullet(), Algebra::CK, max_degree);
  Functional out(grading_of(a), Kind::Character, max_degree);
  for (const auto& s : basis(a, max_degree)) {
    if (s.is_tree() && s != unit(a)) out.set(s, named_value(c, s.tree()));
  }
  return out;
}

TensorSum coaction_phi(const Forest& x, CoactionFlavor flavor) {
  const Algebra ha = coacting_algebra(flavor);
  const std::array<Algebra, 2> slots{ha, Algebra::CK};
  TensorSum out(2);
  out.add({unit(ha), Forest::empty()}, 1);
  for (const auto& t : x.trees()) out = TensorSum::multiply(out, tree_coproduct(t, ha), slots);
  return out;
}

TensorSum coaction_psi(const Forest& x, CoactionFlavor flavor) {
  const Algebra ha = coacting_algebra(flavor);
  const std::array<Algebra, 2> slots{Algebra::CK, ha};
  TensorSum out(2);
  out.add({Forest::empty(), unit(ha)}, 1);
  for (const auto& t : x.trees()) {
    TensorSum d(2);
    for (const auto& [k, c] : tree_coproduct(t, ha).terms()) d.add({k[0], normalize(k[1], ha)}, c);
    out = TensorSum::multiply(out, d, slots);
  }
  return out;
}

CoactionFlavor flavor_of(const Functional& a) {
  return a.grading() == Grading::Edges ? CoactionFlavor::H : CoactionFlavor::HTilde;
}

ForestSum t_L(const Functional& a, const Forest& x) {
  ForestSum out;
  for (const auto sum = coaction_phi(x, flavor_of(a)); const auto& [k, c] : sum.terms()) {
    const Rational v = a(k[0]);
    if (v != 0) out.add(k[1], c * v);
  }
  return out;
}

ForestSum t_L(const Functional& a, const ForestSum& x) {
  ForestSum out;
  for (const auto& [f, c] : x.terms()) out += c * t_L(a, f);
  return out;
}

ForestSum t_R(const Functional& a, const Forest& x) {
  ForestSum out;
  for (const auto sum = coaction_psi(x, flavor_of(a)); const auto& [k, c] : sum.terms()) {
    const Rational v = a(k[1]);
    if (v != 0) out.add(k[0], c * v);
  }
  return out;
}

Functional star_action(const Functional& a, const Functional& b, Side side) {
  require_grading(b, Algebra::CK);
  const CoactionFlavor flavor = flavor_of(a);
  // A forest with v vertices has at most v - 1 edges.
  const std::size_t reach = a.max_degree() + (flavor == CoactionFlavor::H ? 1 : 0);
  const std::size_t d = std::min(b.max_degree(), reach);
  return table(Algebra::CK, d, [&](const Forest& x) -> Rational {
    Rational total = 0;
    if (side == Side::Left) {
      for (const auto sum = coaction_phi(x, flavor); const auto& [k, c] : sum.terms()) {
        const Rational bv = b(k[1]);
        if (bv != 0) total += c * a(k[0]) * bv;
      }
    } else {
      for (const auto sum = coaction_psi(x, flavor); const auto& [k, c] : sum.terms()) {
        const Rational bv = b(k[0]);
        if (bv != 0) total += c * bv * a(k[1]);
      }
    }
    return total;
  });
}

Functional correspond(const Functional& phi, CorrespondenceMode mode, std::size_t max_vertices) {
  const Algebra ha = coacting_algebra(flavor_of(phi));
  if (phi.kind() != Kind::Character && !is_character(phi, ha)) {
    throw DomainError("correspondence needs a character");
  }
  if (mode == CorrespondenceMode::Infinitesimal) {
    const Functional r = star_action(phi, delta_basis(Forest::bullet(), Algebra::CK, max_vertices), Side::Left);
    return as_kind(r, Kind::Infinitesimal, Algebra::CK);
  }
  const Functional r = star_action(phi, named_character(NamedCharacter::Delta, max_vertices), Side::Left);
  return as_kind(r, Kind::Character, Algebra::CK);
}

Functional restrict_to_h(const Functional& b, std::size_t max_edges) {
  require_grading(b, Algebra::CK);
  Functional out(Grading::Edges, Kind::Character, max_edges);
  for (const auto& s : basis(Algebra::H, max_edges)) {
    if (s.is_tree() && !s.tree().is_bullet()) out.set(s, b(s));
  }
  return out;
}

Functional omega(std::size_t max_vertices) {
  if (max_vertices == 0) throw DomainError("omega needs at least one vertex");
  const Functional l = named_character(NamedCharacter::L, max_vertices - 1);
  const Functional via_action =
      star_action(l, delta_basis(Forest::bullet(), Algebra::CK, max_vertices), Side::Left);
  const Functional via_log =
      log_star(named_character(NamedCharacter::Delta, max_vertices), {Algebra::CK, max_vertices});
  for (const auto& s : basis(Algebra::CK, max_vertices)) {
    if (via_action(s) != via_log(s)) {
      throw InternalMismatch("omega mismatch on " + s.to_string() + ": L*delta_bullet gives " +
                             to_string(via_action(s)) + ", log(delta) gives " + to_string(via_log(s)));
    }
  }
  return as_kind(via_log, Kind::Infinitesimal, Algebra::CK);
}

namespace {

TensorSum m13_phi_phi_delta(const Forest& x, CoactionFlavor flavor) {
  const Algebra ha = coacting_algebra(flavor);
  TensorSum out(3);
  for (const auto sum = coproduct(x, Algebra::CK); const auto& [cut, c] : sum.terms()) {
    const TensorSum left = coaction_phi(cut[0], flavor);
    const TensorSum right = coaction_phi(cut[1], flavor);
    for (const auto& [kl, cl] : left.terms()) {
      for (const auto& [kr, cr] : right.terms()) {
        out.add({multiply(kl[0], kr[0], ha), kl[1], kr[1]}, c * cl * cr);
      }
    }
  }
  return out;
}

TensorSum transposed_pair_action(const Functional& a, const Forest& x, CoactionFlavor flavor) {
  const Algebra ha = coacting_algebra(flavor);
  TensorSum out(2);
  for (const auto sum = coproduct(x, Algebra::CK); const auto& [cut, c] : sum.terms()) {
    const TensorSum left = coaction_phi(cut[0], flavor);
    const TensorSum right = coaction_phi(cut[1], flavor);
    for (const auto& [kl, cl] : left.terms()) {
      for (const auto& [kr, cr] : right.terms()) {
        const Rational v = a(multiply(kl[0], kr[0], ha));
        if (v != 0) out.add({kl[1], kr[1]}, c * cl * cr * v);
      }
    }
  }
  return out;
}

}  // namespace

Report verify_coaction_compatibility(std::size_t max_edges, CoactionFlavor flavor) {
  Report report;
  const Algebra ha = coacting_algebra(flavor);
  const std::string suffix = flavor == CoactionFlavor::H ? "" : " (Htilde)";
  std::size_t checked = 0;
  std::string failure;
  for (const auto& x : basis(Algebra::CK, max_edges + 1)) {
    const TensorSum lhs = apply_coproduct_at(coaction_phi(x, flavor), 1, Algebra::CK);
    if (!(lhs == m13_phi_phi_delta(x, flavor)) && failure.empty()) failure = x.to_string();
    ++checked;
  }
  report.add("coaction compatibility" + suffix, failure.empty(),
             failure.empty() ? std::to_string(checked) + " forests" : "fails on " + failure);

  failure.clear();
  checked = 0;
  const std::size_t a_degree = flavor == CoactionFlavor::H ? max_edges : max_edges + 1;
  for (const auto& s : basis(ha, a_degree)) {
    if (!s.is_tree()) continue;
    const Functional a = delta_basis(s, ha, a_degree);
    for (const auto& x : basis(Algebra::CK, max_edges + 1)) {
      const TensorSum lhs = [&] {
        TensorSum out(2);
        for (const auto sum = t_L(a, x); const auto& [f, c] : sum.terms()) {
          TensorSum d = coproduct(f, Algebra::CK);
          d *= c;
          out += d;
        }
        return out;
      }();
      if (!(lhs == transposed_pair_action(a, x, flavor)) && failure.empty()) {
        failure = "Z_" + s.to_string() + " on " + x.to_string();
      }
      ++checked;
    }
  }
  report.add("transposed action" + suffix, failure.empty(),
             failure.empty() ? std::to_string(checked) + " (Z_t, forest) pairs" : "fails for " + failure);
  return report;
}

}  // namespace arbor
