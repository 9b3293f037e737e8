#ifndef MODRING_RATIONAL_HPP
#define MODRING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modring {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator as long as construction goes through make_rational
/// or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "n" or "n/d" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Generalized binomial coefficient C(e, k) for rational e.
Rational binomial(const Rational& e, unsigned k);

}  // namespace modring

#endif  // MODRING_RATIONAL_HPP
