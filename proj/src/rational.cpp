#include "hermite/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hermite {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational make_rational(long numerator, long denominator) {
  return make_rational(Integer(numerator), Integer(denominator));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return make_rational(n, d);
}

}  // namespace hermite
