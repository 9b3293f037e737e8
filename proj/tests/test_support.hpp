#ifndef MODRING_TEST_SUPPORT_HPP
#define MODRING_TEST_SUPPORT_HPP

#include <random>

#include "modring/polynomial.hpp"

namespace modring::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine{20261019};
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Monomial random_monomial(int max_exp) {
  return {static_cast<std::uint32_t>(uniform(0, max_exp)), static_cast<std::uint32_t>(uniform(0, max_exp)),
          static_cast<std::uint32_t>(uniform(0, max_exp))};
}

inline Rational random_rational(long max_abs) {
  const long num = std::uniform_int_distribution<long>(-max_abs, max_abs)(rng());
  const long den = std::uniform_int_distribution<long>(1, max_abs)(rng());
  return make_rational(num, den);
}

inline Polynomial random_polynomial(int max_terms, int max_exp, long max_abs) {
  std::vector<Term> terms;
  const int n = uniform(0, max_terms);
  for (int i = 0; i < n; ++i) terms.push_back({random_monomial(max_exp), random_rational(max_abs)});
  return Polynomial::from_terms(std::move(terms));
}

/// Random weighted-homogeneous polynomial of weighted degree w.
inline Polynomial random_homogeneous(int w, long max_abs) {
  std::vector<Term> terms;
  for (int c = 0; 3 * c <= w; ++c) {
    for (int b = 0; 3 * c + 2 * b <= w; ++b) {
      if (uniform(0, 2) == 0) continue;
      terms.push_back({Monomial{static_cast<std::uint32_t>(w - 3 * c - 2 * b), static_cast<std::uint32_t>(b),
                                static_cast<std::uint32_t>(c)},
                       random_rational(max_abs)});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace modring::testing

#endif  // MODRING_TEST_SUPPORT_HPP
