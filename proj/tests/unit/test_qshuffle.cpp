#include <doctest.h>

#include "../support/oracles.hpp"
#include "arbor/characters.hpp"
#include "arbor/qshuffle.hpp"

using namespace arbor;

namespace {

WordPoly poly(std::initializer_list<std::pair<std::size_t, long>> terms) {
  WordPoly p;
  for (const auto& [k, c] : terms) p.add(k, Rational(c));
  return p;
}

}  // namespace

TEST_SUITE("qshuffle") {
  TEST_CASE("diamond products") {
    CHECK(diamond(WordPoly::monomial(2), WordPoly::monomial(2)) == poly({{4, 6}, {3, 6}, {2, 1}}));
    CHECK(diamond(WordPoly::monomial(1), WordPoly::monomial(1)) == poly({{2, 2}, {1, 1}}));
    CHECK(diamond(WordPoly::one(), poly({{3, 5}, {1, -2}})) == poly({{3, 5}, {1, -2}}));
  }

  TEST_CASE("diamond coefficients count quasi-shuffles") {
    for (std::size_t k = 0; k <= 5; ++k) {
      for (std::size_t l = 0; l <= 5; ++l) {
        const WordPoly p = diamond(WordPoly::monomial(k), WordPoly::monomial(l));
        for (std::size_t r = 0; r <= std::min(k, l); ++r) {
          CAPTURE(k);
          CAPTURE(l);
          CAPTURE(r);
          const long brute = oracle::quasi_shuffles({k, l}, r);
          CHECK(p.coefficient(k + l - r) == brute);
          CHECK(qsh(k, l, r) == brute);
        }
      }
    }
    CHECK(qsh(2, 2, 1) == 6);
    CHECK(qsh(1, 1, 1) == 1);
    CHECK(qsh(3, 4, 0) == 35);
  }

  TEST_CASE("multinomial quasi-shuffle counts") {
    const std::vector<std::vector<std::size_t>> shapes{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2}, {1, 1, 1, 1}};
    for (const auto& ks : shapes) {
      std::size_t total = 0;
      for (auto k : ks) total += k;
      for (std::size_t r = 0; r <= total; ++r) CHECK(qsh_coefficient(ks, r) == oracle::quasi_shuffles(ks, r));
    }
  }

  TEST_CASE("Lambda on small trees") {
    CHECK(lambda(Forest(ladder(2))) == WordPoly::monomial(3));
    CHECK(lambda(Forest(corolla(2))) == poly({{3, 2}, {2, 1}}));
    CHECK(lambda(Forest()) == WordPoly::one());
    CHECK(lambda(parse_forest("[]·[]")) == poly({{2, 2}, {1, 1}}));
  }

  TEST_CASE("omega_s and omega") {
    CHECK(omega_s(corolla(2)) == std::map<std::size_t, Integer>{{2, 1}, {3, 2}});
    CHECK(omega_s(Tree()) == std::map<std::size_t, Integer>{{1, 1}});
    CHECK(omega_via_lambda(corolla(2)) == Rational(1, 6));
    CHECK(omega_via_lambda(ladder(2)) == Rational(1, 3));
    const Functional w = omega(6);
    for (const auto& t : trees_up_to(6)) {
      CHECK(omega_s(t) == omega_s_by_partitions(t));
      CHECK(omega_via_lambda(t) == w(t));
    }
  }

  TEST_CASE("C_s") {
    for (const auto& t : trees_up_to(6)) {
      const auto p = oracle::parents_of(t.code());
      CHECK(Rational(c_s(t, 0)) == Rational(factorial(t.vertices())) / Rational(oracle::tree_factorial(p)));
    }
    // root over ladders with 2 and 1 vertices
    const Tree t = Tree::graft({ladder(1), ladder(0)});
    for (std::size_t s = 0; s <= 3; ++s) CHECK(c_s(t, s) == oracle::quasi_shuffles({2, 1}, s));
  }
}
