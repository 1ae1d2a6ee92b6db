#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tuvote {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "p/q", integers and finite decimals ("0.25"). Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Comma-separated list of rationals, e.g. "3,2,1" or "1,1/2,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

inline Rational floor(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

inline Rational ceil(const Rational& value) { return -floor(-value); }

}  // namespace tuvote
