#ifndef MODRING_SERIES_HPP
#define MODRING_SERIES_HPP

#include <vector>

#include "modring/polynomial.hpp"

namespace modring {

/// Power series in t over Q[alpha, beta, gamma], known through t^order.
class PowerSeries {
 public:
  /// The zero series through t^order.
  explicit PowerSeries(int order);
  /// coeffs[k] is the coefficient of t^k; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<Polynomial> coeffs);

  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  /// Throws std::out_of_range past the truncation order.
  const Polynomial& operator[](int k) const;
  Polynomial& operator[](int k);

  PowerSeries truncated(int order) const;
  /// d/dt, known through t^(order-1).
  PowerSeries derivative() const;

  bool is_zero() const;

  friend PowerSeries operator+(const PowerSeries& x, const PowerSeries& y);
  friend PowerSeries operator-(const PowerSeries& x, const PowerSeries& y);
  /// Cauchy product truncated at the smaller order.
  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y);
  friend PowerSeries operator*(const Polynomial& p, const PowerSeries& s);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// sum_k s^k / k!. Throws std::invalid_argument if s has a constant term.
PowerSeries series_exp(const PowerSeries& s);

/// (1 + u)^e = sum_k C(e, k) u^k. Throws std::invalid_argument if u has a
/// constant term.
PowerSeries series_binomial(const PowerSeries& u, const Rational& e);

/// The relation generating function
///   Phi(t) = (1 - beta t^2)^(-1/2) exp[alpha t + (alpha + 2 gamma/beta) t sum_{m>=1} beta^m t^{2m}/(2m+1)]
/// through t^order. The 2 gamma/beta part is carried as 2 gamma * t sum beta^(m-1) t^{2m}/(2m+1),
/// so every coefficient is a genuine polynomial.
PowerSeries phi_series(int order);

/// r! [t^r] s. Throws std::out_of_range if r exceeds the truncation order.
Polynomial taylor_derivative(const PowerSeries& s, int r);

/// (1 - beta t^2) s'(t) - (alpha + beta t + 2 gamma t^2) s(t), through t^(order-1).
PowerSeries functional_equation_residual(const PowerSeries& s);

}  // namespace modring

#endif  // MODRING_SERIES_HPP
