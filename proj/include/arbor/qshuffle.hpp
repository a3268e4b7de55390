#pragma once

#include <map>
#include <string>
#include <vector>

#include "arbor/linear.hpp"

namespace arbor {

/// Polynomial in one letter x. A word of length k over the single letter is
/// x^k, so words and monomials coincide; the constant term is the empty word.
class WordPoly {
 public:
  using Map = std::map<std::size_t, Rational>;

  WordPoly() = default;
  static WordPoly monomial(std::size_t k, const Rational& c = 1);
  static WordPoly one() { return monomial(0); }

  void add(std::size_t k, const Rational& c);
  Rational coefficient(std::size_t k) const;
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest power present; 0 for constants and for zero.
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Concatenation with one more letter on the right: U -> Ux.
  WordPoly times_x() const;

  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  WordPoly& operator*=(const Rational& c);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend bool operator==(const WordPoly&, const WordPoly&) = default;

  /// Highest power first, e.g. "6x^4 + 6x^3 + x^2".
  std::string to_string() const;

 private:
  Map terms_;
};

/// Quasi-shuffle product, from the letter-by-letter recursion
/// x^k ⋄ x^l = x(x^{k-1} ⋄ x^l) + x(x^k ⋄ x^{l-1}) + x(x^{k-1} ⋄ x^{l-1}).
WordPoly diamond(const WordPoly& u, const WordPoly& v);

/// Number of (k,l)-quasi-shuffles of type r: (k+l-r)!/((k-r)!(l-r)!r!).
Integer qsh(std::size_t k, std::size_t l, std::size_t r);

/// Coefficient of x^{k_1+...+k_n-r} in x^{k_1} ⋄ ... ⋄ x^{k_n}, read off the
/// diamond product.
Integer qsh_coefficient(const std::vector<std::size_t>& ks, std::size_t r);

/// Multiplicative morphism from CK forests: Λ(∅) = 1,
/// Λ(B+(t_1...t_n)) = (Λ(t_1) ⋄ ... ⋄ Λ(t_n)) x, forests map to ⋄-products.
WordPoly lambda(const Forest& s);

/// ω_s(t): coefficient of x^s in Λ(t), for s = 1..v(t) (zeros omitted).
std::map<std::size_t, Integer> omega_s(const Tree& t);

/// sum_s (-1)^{s+1}/s ω_s(t).
Rational omega_via_lambda(const Tree& t);

/// ω_s(t) counted as the terms of the (s-1)-fold reduced CK coproduct whose
/// every factor is a forest of single vertices.
std::map<std::size_t, Integer> omega_s_by_partitions(const Tree& t);

/// C_s(t) = ω_{v(t)-s}(t) by recursion over the children of the root, using
/// quasi-shuffle counts built from the binary closed formula.
Integer c_s(const Tree& t, std::size_t s);

/// Infinitesimal character with ω̃(x^s) = (-1)^{s+1}/s and ω̃(1) = 0.
Rational omega_tilde(const WordPoly& u);
/// Character with δ̃(1) = δ̃(x) = 1, zero on longer words.
Rational delta_tilde(const WordPoly& u);

}  // namespace arbor
