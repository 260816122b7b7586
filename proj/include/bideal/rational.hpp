#ifndef BIDEAL_RATIONAL_HPP
#define BIDEAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace bideal {

using Integer = boost::multiprecision::cpp_int;
/// Always stored reduced with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "a", "-a" or "a/b" with decimal integers a, b (b != 0).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorKind::malformed_input, "not a rational number: '" + std::string(text) + "'");
  Integer d = detail::parse_integer(den);
  if (d == 0) throw Error(ErrorKind::malformed_input, "zero denominator in '" + std::string(text) + "'");
  return Rational(detail::parse_integer(num), d);
}

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace bideal

#endif  // BIDEAL_RATIONAL_HPP
