#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entangle {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& x) {
  std::string s = numerator_of(x).str();
  const Integer den = denominator_of(x);
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "+p", "p/q" or "-p/q". Anything else (including q = 0)
/// throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  const Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value{Integer{std::string(num)}, q};
  return negative ? Rational{-value} : value;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result{1};
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational{-x} : x; }

}  // namespace entangle
