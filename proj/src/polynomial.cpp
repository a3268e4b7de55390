#include "arbor/polynomial.hpp"

#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add(e, 1);
  return p;
}

void Poly::add(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const noexcept {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomials have different variable counts");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomials have different variable counts");
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::multiply(const Poly& a, const Poly& b, std::optional<std::pair<std::size_t, unsigned>> cap) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomials have different variable counts");
  Poly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (cap && ea[cap->first] + eb[cap->first] > cap->second) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add(d, c * static_cast<unsigned long>(e[var]));
  }
  return out;
}

Poly Poly::truncated(std::size_t var, unsigned max_power) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] <= max_power) out.terms_.emplace(e, c);
  }
  return out;
}

Poly Poly::coefficient_of(std::size_t var, unsigned power) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents d = e;
    d[var] = 0;
    out.add(d, c);
  }
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& values, std::optional<std::pair<std::size_t, unsigned>> cap) const {
  if (values.size() != nvars_) throw DomainError("substitution needs one value per variable");
  const std::size_t target = values.empty() ? 0 : values.front().nvars();
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t var, unsigned k) -> const Poly& {
    auto& list = powers[var];
    if (list.empty()) list.push_back(Poly::constant(target, 1));
    while (list.size() <= k) list.push_back(multiply(list.back(), values[var], cap));
    return list[k];
  };
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (std::size_t v = 0; v < nvars_ && !term.is_zero(); ++v) {
      if (e[v] > 0) term = multiply(term, power(v, e[v]), cap);
    }
    out += term;
  }
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += arbor::to_string(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += arbor::to_string(mag) + "*" + monomial;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Poly parse() {
    Poly p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = unary();
    while (true) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const Poly d = unary();
        if (d.total_degree() != 0 || d.is_zero()) fail("division only by nonzero constants");
        p *= Rational(1) / d.terms().begin()->second;
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return unary() * Rational(-1);
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      Poly out = Poly::constant(names_.size(), 1);
      for (unsigned long i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      Poly p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(names_.size(), Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view word = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (word == names_[i]) return Poly::variable(names_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(word) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).parse();
}

}  // namespace arbor
