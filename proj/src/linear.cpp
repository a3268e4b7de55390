#include "arbor/linear.hpp"

#include <algorithm>
#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

constexpr std::string_view kMinus = "\xE2\x88\x92";
constexpr std::string_view kMiddleDot = "\xC2\xB7";
constexpr std::string_view kTensor = "\xE2\x8A\x97";

void add_term(std::map<Forest, Rational>& m, const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Appends " + ", " − " or a leading "−" and returns the absolute coefficient.
Rational append_sign(std::string& out, const Rational& c, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += kMinus;
  } else {
    out += negative ? " " + std::string(kMinus) + " " : " + ";
  }
  return negative ? Rational(-c) : c;
}

}  // namespace

std::string_view name(Algebra a) {
  switch (a) {
    case Algebra::H: return "H";
    case Algebra::HSigma: return "H_sigma";
    case Algebra::HTilde: return "Htilde";
    case Algebra::CK: return "CK";
  }
  return "?";
}

Algebra parse_algebra(std::string_view text) {
  if (text == "H") return Algebra::H;
  if (text == "H_sigma" || text == "Hsigma") return Algebra::HSigma;
  if (text == "Htilde" || text == "H_tilde") return Algebra::HTilde;
  if (text == "CK") return Algebra::CK;
  throw DomainError("unknown algebra '" + std::string(text) + "' (expected H, H_sigma, Htilde or CK)");
}

std::size_t degree(const Forest& s, Algebra a) { return edge_graded(a) ? s.edges() : s.vertices(); }

Forest unit(Algebra a) { return edge_graded(a) ? Forest::bullet() : Forest::empty(); }

Forest normalize(const Forest& s, Algebra a) {
  if (!edge_graded(a)) return s;
  std::vector<Tree> kept;
  for (const auto& t : s.trees()) {
    if (!t.is_bullet()) kept.push_back(t);
  }
  if (kept.empty()) return Forest::bullet();
  return Forest(std::move(kept));
}

Forest multiply(const Forest& x, const Forest& y, Algebra a) { return normalize(x * y, a); }

void ForestSum::add(const Forest& f, const Rational& c) { add_term(terms_, f, c); }

Rational ForestSum::coefficient(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

ForestSum& ForestSum::operator+=(const ForestSum& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

ForestSum& ForestSum::operator-=(const ForestSum& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

ForestSum& ForestSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

Rational ForestSum::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [f, c] : terms_) s += c;
  return s;
}

std::string ForestSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    const Rational mag = append_sign(out, c, first);
    first = false;
    if (mag != 1) out += arbor::to_string(mag) + std::string(kMiddleDot);
    out += f.to_string();
  }
  return out;
}

ForestSum multiply(const ForestSum& x, const ForestSum& y, Algebra a) {
  ForestSum out;
  for (const auto& [fx, cx] : x.terms()) {
    for (const auto& [fy, cy] : y.terms()) out.add(multiply(fx, fy, a), cx * cy);
  }
  return out;
}

ForestSum parse_forest_sum(std::string_view text) {
  ForestSum out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty sum", pos);
      break;
    }
    Rational sign = 1;
    if (text.substr(pos, kMinus.size()) == kMinus) {
      sign = -1;
      pos += kMinus.size();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (text[pos] == '+') {
      if (first) throw ParseError("unexpected '+'", pos);
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    skip();
    Rational coeff = 1;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    if (pos > start) {
      coeff = parse_rational(text.substr(start, pos - start));
      skip();
      if (text.substr(pos, kMiddleDot.size()) == kMiddleDot) {
        pos += kMiddleDot.size();
      } else if (pos < text.size() && text[pos] == '*') {
        ++pos;
      }
      skip();
    }
    // The forest runs until the next top-level sign.
    start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-' &&
           text.substr(pos, kMinus.size()) != kMinus) {
      ++pos;
    }
    std::string_view forest_text = text.substr(start, pos - start);
    while (!forest_text.empty() && std::isspace(static_cast<unsigned char>(forest_text.back()))) {
      forest_text.remove_suffix(1);
    }
    try {
      out.add(parse_forest(forest_text), sign * coeff);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad forest in sum: ") + e.what(), start + e.position());
    }
    first = false;
  }
  return out;
}

void TensorSum::add(const Key& k, const Rational& c) {
  if (k.size() != arity_) throw DomainError("tensor arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorSum::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TensorSum::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorSum& TensorSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorSum TensorSum::multiply(const TensorSum& x, const TensorSum& y, std::span<const Algebra> slots) {
  if (x.arity_ != y.arity_ || slots.size() != x.arity_) throw DomainError("tensor arity mismatch");
  TensorSum out(x.arity_);
  Key key(x.arity_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = arbor::multiply(kx[i], ky[i], slots[i]);
      out.add(key, cx * cy);
    }
  }
  return out;
}

std::string TensorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Rational mag = append_sign(out, c, first);
    first = false;
    if (mag != 1) out += arbor::to_string(mag) + std::string(kMiddleDot);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += kTensor;
      out += k[i].to_string();
    }
  }
  return out;
}

TensorSum tensor(const ForestSum& x, const ForestSum& y) {
  TensorSum out(2);
  for (const auto& [fx, cx] : x.terms()) {
    for (const auto& [fy, cy] : y.terms()) out.add({fx, fy}, cx * cy);
  }
  return out;
}

}  // namespace arbor

namespace arbor {

ForestSum bowtie(const Tree& a, const Tree& b) {
  ForestSum out(butcher(a, b));
  out.add(butcher(b, a), 1);
  out.add(merge(a, b), 1);
  return out;
}

}  // namespace arbor
