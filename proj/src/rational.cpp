#include "tuvote/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tuvote {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)), s);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) {
      throw std::invalid_argument("not a rational number: '" + std::string(s) + "'");
    }
    BigInt den(std::string{den_text});
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw std::invalid_argument("not a rational number: '" + std::string(s) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
    BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part));
    Rational value(whole * scale + frac, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& value) { return value.str(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tuvote
