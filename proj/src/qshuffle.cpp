#include "arbor/qshuffle.hpp"

#include <functional>
#include <numeric>

#include "arbor/errors.hpp"
#include "arbor/hopf.hpp"
#include "arbor/memo.hpp"

namespace arbor {

namespace {

constexpr std::string_view kMinus = "\xE2\x88\x92";

struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::size_t>& p) const noexcept {
    return p.first * 1000003u ^ p.second;
  }
};

// x^k ⋄ x^l by the letter recursion.
const WordPoly& monomial_diamond(std::size_t k, std::size_t l) {
  static detail::MemoCache<std::pair<std::size_t, std::size_t>, WordPoly, PairHash> cache;
  if (k > l) std::swap(k, l);
  return cache.get_or_compute({k, l}, [&] {
    if (k == 0) return WordPoly::monomial(l);
    WordPoly inner = monomial_diamond(k - 1, l);
    inner += monomial_diamond(k, l - 1);
    inner += monomial_diamond(k - 1, l - 1);
    return inner.times_x();
  });
}

// Distribution of exponents of x^{k_1} ⋄ ... ⋄ x^{k_n}, from binary closed-form counts.
std::map<std::size_t, Integer> closed_form_product(const std::vector<std::size_t>& ks) {
  std::map<std::size_t, Integer> dist{{0, 1}};
  for (std::size_t k : ks) {
    std::map<std::size_t, Integer> next;
    for (const auto& [m, c] : dist) {
      for (std::size_t r = 0; r <= std::min(m, k); ++r) next[m + k - r] += c * qsh(m, k, r);
    }
    dist = std::move(next);
  }
  return dist;
}

Integer closed_form_qsh(const std::vector<std::size_t>& ks, std::size_t r) {
  const std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
  if (r > total) return 0;
  const auto dist = closed_form_product(ks);
  auto it = dist.find(total - r);
  return it == dist.end() ? Integer(0) : it->second;
}

}  // namespace

WordPoly WordPoly::monomial(std::size_t k, const Rational& c) {
  WordPoly p;
  p.add(k, c);
  return p;
}

void WordPoly::add(std::size_t k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WordPoly::coefficient(std::size_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

WordPoly WordPoly::times_x() const {
  WordPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k + 1, c);
  return out;
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

WordPoly& WordPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string WordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += kMinus;
    } else {
      out += negative ? " " + std::string(kMinus) + " " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    if (k == 0) {
      out += arbor::to_string(mag);
      continue;
    }
    if (mag != 1) out += arbor::to_string(mag);
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

WordPoly diamond(const WordPoly& u, const WordPoly& v) {
  WordPoly out;
  for (const auto& [k, cu] : u.terms()) {
    for (const auto& [l, cv] : v.terms()) {
      WordPoly part = monomial_diamond(k, l);
      part *= cu * cv;
      out += part;
    }
  }
  return out;
}

Integer qsh(std::size_t k, std::size_t l, std::size_t r) {
  if (r > k || r > l) return 0;
  return factorial(k + l - r) / (factorial(k - r) * factorial(l - r) * factorial(r));
}

Integer qsh_coefficient(const std::vector<std::size_t>& ks, std::size_t r) {
  WordPoly product = WordPoly::one();
  std::size_t total = 0;
  for (std::size_t k : ks) {
    product = diamond(product, WordPoly::monomial(k));
    total += k;
  }
  if (r > total) return 0;
  const Rational c = product.coefficient(total - r);
  return c.get_num();
}

WordPoly lambda(const Forest& s) {
  static detail::MemoCache<std::string, WordPoly> cache;
  WordPoly out = WordPoly::one();
  for (const auto& t : s.trees()) {
    const WordPoly& lt = cache.get_or_compute(t.code(), [&] {
      WordPoly inner = WordPoly::one();
      for (const auto& c : t.children()) inner = diamond(inner, lambda(Forest(c)));
      return inner.times_x();
    });
    out = diamond(out, lt);
  }
  return out;
}

std::map<std::size_t, Integer> omega_s(const Tree& t) {
  std::map<std::size_t, Integer> out;
  for (const auto poly = lambda(Forest(t)); const auto& [k, c] : poly.terms()) out.emplace(k, c.get_num());
  return out;
}

Rational omega_via_lambda(const Tree& t) { return omega_tilde(lambda(Forest(t))); }

std::map<std::size_t, Integer> omega_s_by_partitions(const Tree& t) {
  std::map<std::size_t, Integer> out;
  const Forest f(t);
  for (std::size_t s = 1; s <= t.vertices(); ++s) {
    const TensorSum parts = iterated_coproduct(f, Algebra::CK, s - 1, true);
    Rational count = 0;
    for (const auto& [k, c] : parts.terms()) {
      bool all_vertices = true;
      for (const auto& slot : k) all_vertices = all_vertices && slot.all_bullets();
      if (all_vertices) count += c;
    }
    if (count != 0) out.emplace(s, count.get_num());
  }
  return out;
}

Integer c_s(const Tree& t, std::size_t s) {
  if (s >= t.vertices()) {
    throw DomainError("C_s(t) needs s < v(t); got s=" + std::to_string(s) + " for " + std::to_string(t.vertices()) +
                      " vertices");
  }
  const auto children = t.children();
  Integer total = 0;
  std::vector<std::size_t> r(children.size(), 0);
  // Distribute s - j over the children with r_i < |t_i|.
  std::function<void(std::size_t, std::size_t, std::size_t)> distribute = [&](std::size_t i, std::size_t left,
                                                                                std::size_t j) {
    if (i == children.size()) {
      if (left != 0) return;
      std::vector<std::size_t> reduced(children.size());
      Integer product = 1;
      for (std::size_t m = 0; m < children.size(); ++m) {
        reduced[m] = children[m].vertices() - r[m];
        product *= c_s(children[m], r[m]);
      }
      total += closed_form_qsh(reduced, j) * product;
      return;
    }
    for (std::size_t ri = 0; ri <= left && ri < children[i].vertices(); ++ri) {
      r[i] = ri;
      distribute(i + 1, left - ri, j);
    }
  };
  for (std::size_t j = 0; j <= s; ++j) distribute(0, s - j, j);
  return total;
}

Rational omega_tilde(const WordPoly& u) {
  Rational total = 0;
  for (const auto& [k, c] : u.terms()) {
    if (k == 0) continue;
    total += c * Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  }
  return total;
}

Rational delta_tilde(const WordPoly& u) { return u.coefficient(0) + u.coefficient(1); }

}  // namespace arbor
