#ifndef MODRING_POLYNOMIAL_HPP
#define MODRING_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "modring/monomial.hpp"
#include "modring/rational.hpp"

namespace modring {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse element of Q[alpha, beta, gamma].
///
/// Terms are kept sorted descending under mono_cmp with no zero
/// coefficients, so the leading term is always terms().front() and two
/// equal polynomials have identical term vectors. The zero polynomial is
/// the empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& coeff = 1);

  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Throw std::domain_error on the zero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  Rational coeff(const Monomial& m) const;

  /// Common weighted degree, std::nullopt when the terms disagree ("mixed").
  /// Throws std::domain_error on the zero polynomial.
  std::optional<int> weighted_degree() const;
  bool is_weighted_homogeneous() const { return is_zero() || weighted_degree().has_value(); }
  /// Largest weighted degree of any term; -1 for zero.
  int max_weighted_degree() const;

  /// Sum of the terms of weighted degree exactly w.
  Polynomial homogeneous_component(int w) const;

  Polynomial monic() const;

  /// *this + coeff * m * q, in one merge pass.
  Polynomial add_scaled(const Polynomial& q, const Rational& coeff, const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, long s) { return p *= Rational(s); }
  friend Polynomial operator*(long s, Polynomial p) { return p *= Rational(s); }
  friend Polynomial operator*(const Polynomial& p, const Monomial& m);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p) { return p * m; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text, e.g. "a^2 + b", "-1/2*a^3*c", "0".
  std::string to_string() const;
  /// LaTeX with \alpha, \beta, \gamma.
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned n);

namespace vars {
inline Polynomial a() { return Polynomial(kAlpha); }
inline Polynomial b() { return Polynomial(kBeta); }
inline Polynomial c() { return Polynomial(kGamma); }
}  // namespace vars

/// "a^2*b", "1" for the unit monomial.
std::string to_string(const Monomial& m);
std::string to_latex(const Monomial& m);

}  // namespace modring

#endif  // MODRING_POLYNOMIAL_HPP
