#ifndef MODRING_MONOMIAL_HPP
#define MODRING_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace modring {

/// alpha^a beta^b gamma^c. alpha, beta, gamma carry weights 1, 2, 3.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  constexpr int degree() const { return static_cast<int>(a + b + c); }
  constexpr int weighted_degree() const { return static_cast<int>(a + 2 * b + 3 * c); }
  constexpr bool is_one() const { return a == 0 && b == 0 && c == 0; }

  constexpr bool divides(const Monomial& m) const { return a <= m.a && b <= m.b && c <= m.c; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
};

inline constexpr Monomial kAlpha{1, 0, 0};
inline constexpr Monomial kBeta{0, 1, 0};
inline constexpr Monomial kGamma{0, 0, 1};

/// Precondition: y divides x.
constexpr Monomial operator/(const Monomial& x, const Monomial& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c};
}

constexpr Monomial lcm(const Monomial& x, const Monomial& y) {
  return {x.a > y.a ? x.a : y.a, x.b > y.b ? x.b : y.b, x.c > y.c ? x.c : y.c};
}

constexpr bool coprime(const Monomial& x, const Monomial& y) {
  return (x.a == 0 || y.a == 0) && (x.b == 0 || y.b == 0) && (x.c == 0 || y.c == 0);
}

/// Graded reverse lexicographic order, alpha > beta > gamma, graded by the
/// standard degree a+b+c. On equal degree the first differing exponent
/// scanning from gamma back to alpha decides: the smaller exponent wins.
constexpr std::strong_ordering mono_cmp(const Monomial& x, const Monomial& y) {
  if (auto d = x.degree() <=> y.degree(); d != 0) return d;
  if (auto d = y.c <=> x.c; d != 0) return d;
  if (auto d = y.b <=> x.b; d != 0) return d;
  return x.a <=> y.a;
}

/// Strict weak ordering putting larger monomials first.
struct MonoGreater {
  constexpr bool operator()(const Monomial& x, const Monomial& y) const {
    return mono_cmp(x, y) > 0;
  }
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return (static_cast<std::size_t>(m.a) << 42) ^ (static_cast<std::size_t>(m.b) << 21) ^ m.c;
  }
};

}  // namespace modring

#endif  // MODRING_MONOMIAL_HPP
