#include "modring/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modring {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const Polynomial& PowerSeries::operator[](int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("t^" + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial& PowerSeries::operator[](int k) {
  if (k < 0 || k > order())
    throw std::out_of_range("t^" + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  return PowerSeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) throw std::domain_error("derivative of an order-0 series carries no information");
  PowerSeries out(order() - 1);
  for (int k = 1; k <= order(); ++k) out[k - 1] = coeffs_[k] * Rational(k);
  return out;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PowerSeries operator+(const PowerSeries& x, const PowerSeries& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) out[k] = x[k] + y[k];
  return out;
}

PowerSeries operator-(const PowerSeries& x, const PowerSeries& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) out[k] = x[k] - y[k];
  return out;
}

PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

PowerSeries operator*(const Polynomial& p, const PowerSeries& s) {
  PowerSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = p * s[k];
  return out;
}

PowerSeries series_exp(const PowerSeries& s) {
  if (!s[0].is_zero()) throw std::invalid_argument("series_exp needs a zero constant term");
  PowerSeries out = PowerSeries::one(s.order());
  PowerSeries power = PowerSeries::one(s.order());
  // s^k starts at t^k, so k never needs to exceed the order.
  for (int k = 1; k <= s.order(); ++k) {
    power = power * s;
    const Rational inv = make_rational(Integer(1), factorial(static_cast<unsigned>(k)));
    for (int i = k; i <= s.order(); ++i) out[i] += power[i] * inv;
  }
  return out;
}

PowerSeries series_binomial(const PowerSeries& u, const Rational& e) {
  if (!u[0].is_zero()) throw std::invalid_argument("series_binomial needs a zero constant term");
  PowerSeries out = PowerSeries::one(u.order());
  PowerSeries power = PowerSeries::one(u.order());
  for (int k = 1; k <= u.order(); ++k) {
    power = power * u;
    const Rational c = binomial(e, static_cast<unsigned>(k));
    if (c == 0) break;
    for (int i = k; i <= u.order(); ++i) out[i] += power[i] * c;
  }
  return out;
}

PowerSeries phi_series(int order) {
  if (order < 0) throw std::invalid_argument("phi_series: negative order");
  using namespace vars;
  // S(t) = sum_{m>=1} beta^m t^{2m+1}/(2m+1), Stilde(t) = sum_{m>=1} beta^(m-1) t^{2m+1}/(2m+1).
  PowerSeries exponent(order);
  if (order >= 1) exponent[1] = a();
  for (int m = 1; 2 * m + 1 <= order; ++m) {
    const Rational w = make_rational(1, 2 * m + 1);
    const Polynomial beta_pow = pow(b(), static_cast<unsigned>(m - 1));
    exponent[2 * m + 1] = (a() * b() * beta_pow + 2 * c() * beta_pow) * w;
  }
  PowerSeries minus_beta_t2(order);
  if (order >= 2) minus_beta_t2[2] = -b();
  return series_binomial(minus_beta_t2, make_rational(-1, 2)) * series_exp(exponent);
}

Polynomial taylor_derivative(const PowerSeries& s, int r) {
  if (r < 0) throw std::invalid_argument("negative derivative order");
  if (r > s.order())
    throw std::out_of_range("derivative of order " + std::to_string(r) + " needs truncation order >= " +
                            std::to_string(r) + ", have " + std::to_string(s.order()));
  return s[r] * Rational(factorial(static_cast<unsigned>(r)));
}

PowerSeries functional_equation_residual(const PowerSeries& s) {
  using namespace vars;
  const int n = s.order() - 1;
  if (n < 0) throw std::domain_error("residual needs truncation order >= 1");
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) {
    // [t^k] of (1 - beta t^2) s' - (alpha + beta t + 2 gamma t^2) s
    Polynomial r = s[k + 1] * Rational(k + 1) - a() * s[k];
    if (k >= 1) r -= b() * s[k - 1];
    if (k >= 2) r -= b() * s[k - 1] * Rational(k - 1) + 2 * c() * s[k - 2];
    out[k] = r;
  }
  return out;
}

}  // namespace modring
