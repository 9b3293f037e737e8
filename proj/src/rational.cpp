#include "modring/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace modring {

namespace {

Integer parse_integer(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad digit in '" + std::string(digits) + "'");
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

Rational binomial(const Rational& e, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= e - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace modring
