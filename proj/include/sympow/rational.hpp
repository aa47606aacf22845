#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympow {

using Integer = boost::multiprecision::mpz_int;

// Arbitrary-precision rational scalar. GMP keeps values canonical: the
// denominator is positive and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::mpq_rational;

// Renders "p" for integral values, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

// Parses "p" or "p/q" with an optional sign on p; q must be a positive
// integer literal. The stored value is canonical no matter how the input
// was written ("2/4" parses to 1/2).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num, /*allow_sign=*/true)) {
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  }
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  Integer n{std::string(num)};
  if (slash == std::string_view::npos) return Rational(n);
  if (!detail::is_integer_literal(den, /*allow_sign=*/false)) {
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  }
  Integer d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" +
                                std::string(text) + "'");
  }
  return Rational(n, d);
}

inline Rational rational_pow(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational out = 1;
  Rational b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace sympow
