#include <doctest.h>

#include "../support/oracles.hpp"
#include "arbor/characters.hpp"
#include "arbor/errors.hpp"

using namespace arbor;

namespace {

Rational inverse_factorial(const Tree& t) {
  return Rational(1) / Rational(oracle::tree_factorial(oracle::parents_of(t.code())));
}

bool same_on(const Functional& f, const Functional& g, Algebra a, std::size_t d) {
  for (const auto& s : basis(a, d)) {
    if (f(s) != g(s)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("E and E_sigma from tree factorials") {
    for (const auto& t : trees_up_to(7)) {
      CHECK(named_value(NamedCharacter::E, t) == inverse_factorial(t));
      const Rational sigma(oracle::automorphisms(oracle::parents_of(t.code())));
      CHECK(named_value(NamedCharacter::ESigma, t) == inverse_factorial(t) / sigma);
    }
  }

  TEST_CASE("L on corollas gives Bernoulli numbers") {
    const auto b = oracle::bernoulli_by_recursion(12);
    const auto series = oracle::bernoulli_over_factorial(12);
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(named_value(NamedCharacter::L, corolla(n)) == b[n]);
      CHECK(named_value(NamedCharacter::LSigma, corolla(n)) == series[n]);
      const Rational inv = Rational(1) / Rational(factorial(n + 1));
      CHECK(named_value(NamedCharacter::ESigma, corolla(n)) == inv);
      CHECK(named_value(NamedCharacter::ESigma, ladder(n)) == inv);
    }
    CHECK(named_value(NamedCharacter::L, corolla(2)) == Rational(1, 6));
    CHECK(named_value(NamedCharacter::L, corolla(3)) == 0);
    CHECK(named_value(NamedCharacter::L, corolla(4)) == Rational(-1, 30));
  }

  TEST_CASE("E and L are inverse in H") {
    const ConvolutionContext ctx{Algebra::H, 5};
    const Functional e = named_character(NamedCharacter::E, 5);
    const Functional l = named_character(NamedCharacter::L, 5);
    CHECK(same_on(convolve(e, l, ctx), convolution_unit(ctx), Algebra::H, 5));
    CHECK(same_on(convolve(l, e, ctx), convolution_unit(ctx), Algebra::H, 5));
    CHECK(same_on(inverse_star(e, ctx), l, Algebra::H, 5));
  }

  TEST_CASE("exp and log in CK") {
    const ConvolutionContext ctx{Algebra::CK, 6};
    const Functional db = delta_basis(Forest::bullet(), Algebra::CK, 6);
    const Functional e = exp_star(db, ctx);
    for (const auto& t : trees_up_to(6)) CHECK(e(t) == inverse_factorial(t));
    Functional f(Grading::Vertices, Kind::Infinitesimal, 6);
    Rational v = 1;
    for (const auto& t : trees_up_to(6)) {
      f.set(t, v);
      v = -v / 2 + 1;
    }
    CHECK(same_on(log_star(exp_star(f, ctx), ctx), f, Algebra::CK, 6));
    const Functional eps = convolution_unit(ctx);
    const Functional d = named_character(NamedCharacter::Delta, 6);
    CHECK(same_on(convolve(d, eps, ctx), d, Algebra::CK, 6));
    CHECK(same_on(convolve(eps, d, ctx), d, Algebra::CK, 6));
  }

  TEST_CASE("omega values") {
    const Functional w = omega(5);
    CHECK(w(Tree()) == 1);
    CHECK(w(ladder(1)) == Rational(-1, 2));
    CHECK(w(ladder(2)) == Rational(1, 3));
    CHECK(w(corolla(2)) == Rational(1, 6));
    CHECK(w(corolla(3)) == 0);
    CHECK(w(ladder(3)) == Rational(-1, 4));
    CHECK(w(ladder(4)) == Rational(1, 5));
    CHECK(w(corolla(4)) / Rational(symmetry(corolla(4))) == Rational(-1, 720));
    CHECK(w(parse_forest("[]·[]")) == 0);
  }

  TEST_CASE("coactions") {
    CHECK(coaction_phi(Forest()).to_string() == "[]⊗∅");
    CHECK(coaction_psi(Forest()).to_string() == "∅⊗[]");
    CHECK(coaction_phi(Forest(ladder(1))) == coproduct(Forest(ladder(1)), Algebra::H));
    const Functional z = delta_basis(Forest(ladder(1)), Algebra::H, 4);
    CHECK(t_L(z, Forest(ladder(2))) == ForestSum(Forest(ladder(1)), 2));
    const Functional unit = counit_functional(Algebra::H, 4);
    for (const auto& x : basis(Algebra::CK, 4)) CHECK(t_L(unit, x) == ForestSum(x));
  }

  TEST_CASE("correspondence examples") {
    const Functional e = named_character(NamedCharacter::E, 5);
    const Functional b = correspond(e, CorrespondenceMode::Character, 6);
    const Functional expected = exp_star(delta_basis(Forest::bullet(), Algebra::CK, 6), {Algebra::CK, 6});
    CHECK(same_on(b, expected, Algebra::CK, 6));
    CHECK(correspond(e, CorrespondenceMode::Infinitesimal, 6)(Tree()) == 1);
    CHECK_THROWS_AS(correspond(delta_basis(Forest(ladder(1)), Algebra::H, 5), CorrespondenceMode::Character, 6),
                    DomainError);
  }

  TEST_CASE("characters from tree values") {
    std::map<Tree, Rational> tv;
    for (const auto& t : trees_up_to(4)) tv[t] = Rational(static_cast<long>(t.vertices()), 7);
    const Functional f = character_from_tree_values(tv, Algebra::CK, 4);
    CHECK(f(parse_forest("[[]]·[]")) == tv[ladder(1)] * tv[Tree()]);
    CHECK(f(Forest()) == 1);
    CHECK(is_character(f, Algebra::CK));
    CHECK(!is_infinitesimal(f, Algebra::CK));
    std::map<Tree, Rational> delta{{Tree(), 1}};
    for (const auto& t : trees_up_to(4)) delta.emplace(t, 0);
    CHECK(same_on(character_from_tree_values(delta, Algebra::CK, 4), named_character(NamedCharacter::Delta, 4),
                  Algebra::CK, 4));
    CHECK(delta_basis(Forest(), Algebra::CK, 4)(Forest()) == 1);
    CHECK(is_infinitesimal(delta_basis(Forest(ladder(1)), Algebra::H, 4), Algebra::H));
  }

  TEST_CASE("named characters parse") {
    CHECK(parse_named_character("E_sigma") == NamedCharacter::ESigma);
    CHECK_THROWS(parse_named_character("nope"));
  }
}
