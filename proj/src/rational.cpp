#include "arbor/rational.hpp"

#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string cleaned;
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.substr(pos, 3) == "\xE2\x88\x92") {
    cleaned.push_back('-');
    pos += 3;
  } else if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') cleaned.push_back('-');
    ++pos;
  }
  const std::size_t start = pos;
  bool seen_slash = false;
  bool digits_after_slash = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cleaned.push_back(c);
      if (seen_slash) digits_after_slash = true;
    } else if (c == '/' && !seen_slash && pos > start) {
      cleaned.push_back(c);
      seen_slash = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      break;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in rational", pos);
    }
  }
  for (std::size_t rest = pos; rest < text.size(); ++rest) {
    if (!std::isspace(static_cast<unsigned char>(text[rest]))) {
      throw ParseError("trailing characters after rational", rest);
    }
  }
  if (pos == start || (seen_slash && !digits_after_slash)) {
    throw ParseError("empty or incomplete rational", pos);
  }
  Rational q(cleaned, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator", pos);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace arbor
