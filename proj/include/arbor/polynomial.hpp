#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;
  using Map = std::map<Exponents, Rational>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  void add(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest total degree; 0 for the zero polynomial.
  unsigned total_degree() const noexcept;
  /// Largest exponent of one variable.
  unsigned degree_in(std::size_t var) const noexcept;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Product, optionally dropping every term whose exponent of `cap->first`
  /// exceeds `cap->second`.
  static Poly multiply(const Poly& a, const Poly& b,
                       std::optional<std::pair<std::size_t, unsigned>> cap = std::nullopt);

  Poly derivative(std::size_t var) const;
  /// Drops the terms with exponent of `var` above `max_power`.
  Poly truncated(std::size_t var, unsigned max_power) const;
  /// Part of exact degree `power` in `var`, with that variable removed (set to 1).
  Poly coefficient_of(std::size_t var, unsigned power) const;

  /// Replaces variable i by values[i] (which share a variable count), with
  /// the same optional truncation as multiply.
  Poly substitute(const std::vector<Poly>& values,
                  std::optional<std::pair<std::size_t, unsigned>> cap = std::nullopt) const;

  /// Human-readable form with the given variable names, e.g. "2*y1^2*h + 1/2".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  Map terms_;
};

/// Parses +, -, *, ^ (nonnegative integer powers), parentheses, rational
/// literals "p" or "p/q" and the given variable names. Juxtaposition is not
/// multiplication. Throws ParseError.
Poly parse_poly(std::string_view text, const std::vector<std::string>& names);

}  // namespace arbor
