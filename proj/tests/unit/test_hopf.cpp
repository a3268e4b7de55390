#include <doctest.h>

#include "../support/oracles.hpp"
#include "arbor/functional.hpp"
#include "arbor/hopf.hpp"

using namespace arbor;

namespace {

Rational forest_sigma(const Forest& f) {
  Rational out = 1;
  for (const auto& t : f.trees()) out *= Rational(oracle::automorphisms(oracle::parents_of(t.code())));
  return out;
}

TensorSum sigma_oracle(const Tree& t) {
  TensorSum out(2);
  const Rational st = forest_sigma(Forest(t));
  for (const auto plain = oracle::coproduct(t.code(), oracle::Cop::H); const auto& [k, c] : plain.terms()) {
    out.add(k, c * forest_sigma(k[0]) * forest_sigma(k[1]) / st);
  }
  return out;
}

// m ∘ (S ⊗ id) ∘ Δ
ForestSum antipode_convolution(const Forest& s, Algebra a) {
  ForestSum out;
  for (const auto d = coproduct(s, a); const auto& [k, c] : d.terms()) out += c * multiply(antipode(k[0], a), ForestSum(k[1]), a);
  return out;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("worked coproducts") {
    CHECK(coproduct(Forest(ladder(2)), Algebra::H).to_string() == "[]⊗[[[]]] + 2·[[]]⊗[[]] + [[[]]]⊗[]");
    CHECK(coproduct(Forest(corolla(3)), Algebra::H) ==
          [] {
            TensorSum x(2);
            x.add({Forest(corolla(3)), Forest::bullet()}, 1);
            x.add({Forest::bullet(), Forest(corolla(3))}, 1);
            x.add({Forest(corolla(2)), Forest(ladder(1))}, 3);
            x.add({Forest(ladder(1)), Forest(corolla(2))}, 3);
            return x;
          }());
    CHECK(coproduct(Forest(ladder(1)), Algebra::CK).to_string() == "∅⊗[[]] + []⊗[] + [[]]⊗∅");
    TensorSum c2(2);
    c2.add({Forest(corolla(2)), Forest()}, 1);
    c2.add({Forest(), Forest(corolla(2))}, 1);
    c2.add({Forest::bullet(), Forest(ladder(1))}, 2);
    c2.add({Forest::bullets(2), Forest::bullet()}, 1);
    CHECK(coproduct(Forest(corolla(2)), Algebra::CK) == c2);
    TensorSum e2(2);
    e2.add({Forest(ladder(2)), Forest::bullet()}, 1);
    e2.add({Forest::bullets(3), Forest(ladder(2))}, 1);
    e2.add({Forest(ladder(1)) * Forest::bullet(), Forest(ladder(1))}, 2);
    CHECK(coproduct(Forest(ladder(2)), Algebra::HTilde) == e2);
    CHECK(reduced_coproduct(Forest::bullet(), Algebra::CK).is_zero());
    CHECK(reduced_coproduct(Forest(corolla(3)), Algebra::H).size() == 2);
  }

  TEST_CASE("tree coproducts match subset enumeration") {
    for (const auto& t : trees_up_to(6)) {
      CAPTURE(t.code());
      CHECK(tree_coproduct(t, Algebra::H) == oracle::coproduct(t.code(), oracle::Cop::H));
      CHECK(tree_coproduct(t, Algebra::HTilde) == oracle::coproduct(t.code(), oracle::Cop::HTilde));
      CHECK(tree_coproduct(t, Algebra::CK) == oracle::coproduct(t.code(), oracle::Cop::CK));
      CHECK(tree_coproduct(t, Algebra::HSigma) == sigma_oracle(t));
    }
  }

  TEST_CASE("iterated coproduct is the same from either side") {
    const Forest e1(ladder(1));
    const TensorSum once = coproduct(e1, Algebra::CK);
    const TensorSum left = apply_coproduct_at(once, 0, Algebra::CK);
    CHECK(left == apply_coproduct_at(once, 1, Algebra::CK));
    CHECK(left.size() == 6);
    CHECK(iterated_coproduct(e1, Algebra::CK, 2, false) == left);
  }

  TEST_CASE("sigma-normalized antipodes") {
    CHECK(antipode(Forest(ladder(2)), Algebra::HSigma).to_string() == "−[[[]]] + 2·[[]]·[[]]");
    CHECK(antipode(Forest(corolla(2)), Algebra::HSigma).to_string() == "−[[][]] + [[]]·[[]]");
    CHECK(antipode(Forest(ladder(3)), Algebra::HSigma).to_string() ==
          "−[[[[]]]] + 5·[[]]·[[[]]] − 5·[[]]·[[]]·[[]]");
    CHECK(antipode(Forest::bullet(), Algebra::HSigma).to_string() == "[]");
  }

  TEST_CASE("antipode axiom and method agreement") {
    for (Algebra a : {Algebra::H, Algebra::HSigma, Algebra::CK}) {
      for (const auto& s : basis(a, 4)) {
        CAPTURE(s.to_string());
        const ForestSum unit_part = counit(s, a) * ForestSum(unit(a));
        CHECK(antipode_convolution(s, a) == unit_part);
        CHECK(antipode(s, a, AntipodeMethod::RecursiveLeft) == antipode(s, a));
        if (a != Algebra::CK) CHECK(antipode(s, a, AntipodeMethod::ClosedForm) == antipode(s, a));
      }
    }
  }

  TEST_CASE("corolla antipode coefficients n!/(k_1!...k_r!) over compositions") {
    for (std::size_t n = 1; n <= 6; ++n) {
      ForestSum expected;
      std::function<void(std::size_t, std::vector<Tree>&, Rational)> rec = [&](std::size_t left, std::vector<Tree>& parts,
                                                                              Rational coeff) {
        if (left == 0) {
          expected.add(Forest(parts), coeff);
          return;
        }
        for (std::size_t k = 1; k <= left; ++k) {
          parts.push_back(corolla(k));
          rec(left - k, parts, -coeff / Rational(factorial(k)));
          parts.pop_back();
        }
      };
      std::vector<Tree> parts;
      rec(n, parts, Rational(factorial(n)));
      CAPTURE(n);
      CHECK(antipode(Forest(corolla(n)), Algebra::H) == expected);
      CHECK(corolla_antipode(n) == expected);
    }
  }

  TEST_CASE("closed-form coproduct families") {
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(corolla_coproduct(n) == tree_coproduct(corolla(n), Algebra::H));
      CHECK(ladder_coproduct(n) == tree_coproduct(ladder(n), Algebra::H));
      CHECK(floored_coproduct(corolla(n)) == corolla_coproduct(n));
    }
    CHECK(corolla_coproduct(2).to_string() == "[]⊗[[][]] + 2·[[]]⊗[[]] + [[][]]⊗[]");
    CHECK(ladder_coproduct(3).coefficient_sum() == 8);
    CHECK(ladder_coproduct(3).coefficient({parse_forest("[[]]·[[]]"), Forest(ladder(1))}) == 1);
    for (const auto& t : trees_up_to(6)) {
      if (t.is_bullet()) continue;
      CAPTURE(t.code());
      CHECK(floored_coproduct(t) == tree_coproduct(t, Algebra::H));
    }
  }

  TEST_CASE("B+ is a 1-cocycle for the CK coproduct") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (const auto& u : enumerate_forests(n)) {
        TensorSum rhs = coproduct(u, Algebra::CK);
        TensorSum shifted(2);
        for (const auto& [k, c] : rhs.terms()) shifted.add({k[0], Forest(b_plus(k[1]))}, c);
        shifted.add({Forest(b_plus(u)), Forest()}, 1);
        CHECK(coproduct(Forest(b_plus(u)), Algebra::CK) == shifted);
      }
    }
  }

  TEST_CASE("unknown variants are rejected") { CHECK_THROWS(parse_algebra("Q")); }
}
