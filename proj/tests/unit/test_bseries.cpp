#include <doctest.h>

#include "arbor/bseries.hpp"
#include "arbor/characters.hpp"
#include "arbor/errors.hpp"

using namespace arbor;

namespace {

Poly y_poly(const std::string& text) { return parse_poly(text, {"y"}); }

PolyVectorField field1(const std::string& text) { return parse_field(1, {text}); }

Functional coefficients(std::initializer_list<std::pair<std::string, Rational>> values, std::size_t order,
                        Kind kind = Kind::Character) {
  Functional f(Grading::Vertices, kind, order);
  for (const auto& [t, c] : values) f.set(Tree::parse(t), c);
  return f;
}

// Poly in y, h from a B-series map, for d = 1.
Poly as_poly(const BSeriesMap& m) { return m.component(0); }

Poly yh(const std::string& text) { return parse_poly(text, {"y", "h"}); }

}  // namespace

TEST_SUITE("bseries") {
  TEST_CASE("polynomials") {
    CHECK(y_poly("(y+1)^2") == y_poly("y^2 + 2*y + 1"));
    CHECK(y_poly("y^3/3").derivative(0) == y_poly("y^2"));
    CHECK(y_poly("2*y - y - y").is_zero());
    CHECK(parse_poly("y1*y2 - 1/2", {"y1", "y2"}).total_degree() == 2);
    CHECK_THROWS(y_poly("y +"));
    CHECK_THROWS(y_poly("z"));
    CHECK_THROWS(y_poly("1/(y)"));
  }

  TEST_CASE("elementary differentials of y^2") {
    const PolyVectorField a = field1("y^2");
    CHECK(elementary_differential(Tree(), a).components[0] == y_poly("y^2"));
    CHECK(elementary_differential(ladder(1), a).components[0] == y_poly("2*y^3"));
    CHECK(elementary_differential(corolla(2), a).components[0] == y_poly("2*y^4"));
    CHECK(elementary_differential(ladder(2), a).components[0] == y_poly("4*y^4"));
  }

  TEST_CASE("elementary differentials in two dimensions") {
    // a = (y2, -y1): F(E_1) = a' a = (-y1, -y2)
    const PolyVectorField a = parse_field(2, {"y2", "-y1"});
    const PolyVectorField e1 = elementary_differential(ladder(1), a);
    const std::vector<std::string> names{"y1", "y2"};
    CHECK(e1.components[0] == parse_poly("-y1", names));
    CHECK(e1.components[1] == parse_poly("-y2", names));
    CHECK(elementary_differential(corolla(2), a).components[0].is_zero());
  }

  TEST_CASE("exact flow of y' = y^2") {
    Functional alpha(Grading::Vertices, Kind::Character, 6);
    for (const auto& t : trees_up_to(6)) alpha.set(t, Rational(1) / Rational(tree_factorial(t)));
    const BSeriesMap m = bseries_eval(alpha, field1("y^2"), 6);
    CHECK(as_poly(m) == yh("y + h*y^2 + h^2*y^3 + h^3*y^4 + h^4*y^5 + h^5*y^6 + h^6*y^7"));
    CHECK(verify_exact_flow(6).ok());
  }

  TEST_CASE("identity and Euler step") {
    const PolyVectorField a = field1("y^2 + 1");
    const BSeriesMap id = bseries_eval(coefficients({}, 3), a, 3);
    CHECK(as_poly(id) == yh("y"));
    const BSeriesMap euler = bseries_eval(coefficients({{"[]", 1}}, 3), a, 3);
    CHECK(as_poly(euler) == yh("y + h*(y^2 + 1)"));
  }

  TEST_CASE("two Euler steps") {
    const PolyVectorField a = field1("y^2");
    const Functional e = coefficients({{"[]", 1}}, 2);
    const BSeriesMap step = bseries_eval(e, a, 2);
    // y1 = y + h y^2, y2 = y1 + h y1^2 truncated at h^2
    CHECK(as_poly(step.then(step)) == yh("y + 2*h*y^2 + 2*h^2*y^3"));
    CHECK(step.then(step) == bseries_eval(compose_coeffs(e, e), a, 2));
  }

  TEST_CASE("substitution coefficients") {
    const Rational c(3, 7);
    const Functional alpha = coefficients({{"[]", 1}, {"[[]]", c}}, 2);
    const Functional beta = coefficients({{"[]", Rational(2)}, {"[[]]", Rational(5)}}, 2, Kind::Infinitesimal);
    const Functional ab = substitute_coeffs(alpha, beta);
    CHECK(ab(ladder(1)) == beta(ladder(1)) + c * beta(Tree()));
    const Functional unit = coefficients({{"[]", 1}}, 4);
    Functional b(Grading::Vertices, Kind::Infinitesimal, 4);
    for (const auto& t : trees_up_to(4)) b.set(t, Rational(static_cast<long>(t.vertices() * t.vertices()), 5));
    const Functional same = substitute_coeffs(unit, b);
    for (const auto& t : trees_up_to(4)) CHECK(same(t) == b(t));
    CHECK_THROWS_AS(substitute_coeffs(coefficients({{"[]", 2}}, 2), beta), DomainError);
    CHECK_NOTHROW(substitute_coeffs(coefficients({{"[]", 2}}, 2), beta, true));
  }

  TEST_CASE("composition with the counit") {
    const Functional alpha = coefficients({{"[]", 1}, {"[[]]", Rational(1, 3)}, {"[[][]]", Rational(-2)}}, 3);
    const Functional eps = coefficients({}, 3);
    const Functional out = compose_coeffs(alpha, eps);
    for (const auto& t : trees_up_to(3)) CHECK(out(t) == alpha(t));
  }

  TEST_CASE("substitution and composition laws hold exactly") {
    const Functional alpha = coefficients({{"[]", 1}, {"[[]]", Rational(1, 2)}}, 4);
    Functional e(Grading::Vertices, Kind::Infinitesimal, 4);
    for (const auto& t : trees_up_to(4)) e.set(t, Rational(1) / Rational(tree_factorial(t)));
    CHECK(verify_substitution(field1("y^2"), alpha, e, 4).ok());
    Functional ec(Grading::Vertices, Kind::Character, 4);
    for (const auto& t : trees_up_to(4)) ec.set(t, e(t));
    CHECK(verify_composition(parse_field(2, {"y1*y2", "y1^2 - y2"}), alpha, ec, 4).ok());
  }
}
