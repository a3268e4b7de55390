#include <doctest.h>

#include "../support/oracles.hpp"
#include "arbor/characters.hpp"
#include "arbor/prelie.hpp"

using namespace arbor;

namespace {

// t ↷ u by attaching t under each vertex of u's parent array.
ForestSum attach_everywhere(const Tree& t, const Tree& u) {
  ForestSum out;
  const auto p = oracle::parents_of(u.code());
  const auto q = oracle::parents_of(t.code());
  for (std::size_t v = 0; v < p.size(); ++v) {
    oracle::Parents joined = p;
    const int offset = static_cast<int>(p.size());
    for (std::size_t i = 0; i < q.size(); ++i) joined.push_back(i == 0 ? static_cast<int>(v) : q[i] + offset);
    out.add(Forest(Tree::parse(oracle::encode(joined))), 1);
  }
  return out;
}

}  // namespace

TEST_SUITE("prelie") {
  TEST_CASE("grafting examples") {
    CHECK(graft(Tree(), Tree()) == ForestSum(Forest(ladder(1))));
    CHECK(graft(Tree(), ladder(1), true) == ForestSum(Forest(ladder(2))) + ForestSum(Forest(corolla(2))));
    CHECK(graft(Tree(), ladder(1)) == ForestSum(Forest(ladder(2))) + ForestSum(Forest(corolla(2)), 2));
  }

  TEST_CASE("normalized grafting attaches under every vertex") {
    for (const auto& t : trees_up_to(4)) {
      for (const auto& u : trees_up_to(4)) CHECK(graft(t, u, true) == attach_everywhere(t, u));
    }
  }

  TEST_CASE("grafting read from cuts") {
    for (const auto& t : trees_up_to(4)) {
      for (const auto& u : trees_up_to(4)) CHECK(graft(t, u) == graft_by_cuts(t, u));
    }
  }

  TEST_CASE("insertion read from the H coproduct") {
    const ForestSum e1e1 = insert(ladder(1), ladder(1));
    CHECK(e1e1.coefficient(Forest(ladder(2))) == 2);
    CHECK(e1e1.coefficient(Forest(corolla(2))) == tree_coproduct(corolla(2), Algebra::H).coefficient(
                                                      {Forest(ladder(1)), Forest(ladder(1))}));
    for (const auto& t : trees_up_to(4)) {
      for (const auto& u : trees_up_to(4)) {
        const ForestSum plain = insert(t, u);
        const ForestSum norm = insert(t, u, true);
        for (const auto& [v, c] : plain.terms()) {
          const Tree& w = v.tree();
          CHECK(norm.coefficient(v) == c * Rational(symmetry(t) * symmetry(u)) / Rational(symmetry(w)));
        }
        CHECK(norm.size() == plain.size());
      }
    }
  }

  TEST_CASE("left pre-Lie identity") {
    const TreeProduct products[] = {
        [](const Tree& a, const Tree& b) { return insert(a, b); },
        [](const Tree& a, const Tree& b) { return insert(a, b, true); },
        [](const Tree& a, const Tree& b) { return graft(a, b); },
        [](const Tree& a, const Tree& b) { return graft(a, b, true); },
    };
    const auto trees = trees_up_to(3);
    for (const auto& product : products) {
      for (const auto& x : trees) {
        for (const auto& y : trees) {
          for (const auto& z : trees) CHECK(prelie_defect(product, x, y, z).is_zero());
        }
      }
    }
  }

  TEST_CASE("Bernoulli numbers") {
    const auto ours = bernoulli_numbers(14);
    const auto ref = oracle::bernoulli_by_recursion(14);
    for (std::size_t n = 0; n <= 14; ++n) CHECK(ours[n] == ref[n]);
  }

  TEST_CASE("Magnus element") {
    const ForestSum m = magnus_omega(5);
    CHECK(m.coefficient(Forest::bullet()) == 1);
    CHECK(m.coefficient(Forest(ladder(1))) == Rational(-1, 2));
    CHECK(m.coefficient(Forest(ladder(2))) == Rational(1, 3));
    CHECK(m.coefficient(Forest(corolla(2))) == Rational(1, 12));
    const Functional w = omega(5);
    for (const auto& t : trees_up_to(5)) CHECK(m.coefficient(Forest(t)) == w(t) / Rational(symmetry(t)));
  }
}
