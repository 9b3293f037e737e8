#include "modring/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace modring {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.push_back({m, coeff});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return mono_cmp(x.mono, y.mono) > 0; });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
  return terms_.front().mono;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return mono_cmp(t.mono, key) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::optional<int> Polynomial::weighted_degree() const {
  if (terms_.empty()) throw std::domain_error("weighted degree of the zero polynomial");
  const int w = terms_.front().mono.weighted_degree();
  for (const auto& t : terms_) {
    if (t.mono.weighted_degree() != w) return std::nullopt;
  }
  return w;
}

int Polynomial::max_weighted_degree() const {
  int w = -1;
  for (const auto& t : terms_) w = std::max(w, t.mono.weighted_degree());
  return w;
}

Polynomial Polynomial::homogeneous_component(int w) const {
  Polynomial out;
  for (const auto& t : terms_) {
    if (t.mono.weighted_degree() == w) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  Polynomial out = *this;
  const Rational lc = leading_coeff();
  for (auto& t : out.terms_) t.coeff /= lc;
  return out;
}

Polynomial Polynomial::add_scaled(const Polynomial& q, const Rational& coeff, const Monomial& m) const {
  if (coeff == 0 || q.is_zero()) return *this;
  Polynomial out;
  out.terms_.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  while (i != terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end()) {
      out.terms_.push_back(*i++);
      continue;
    }
    const Monomial shifted = j->mono * m;
    const auto ord = i == terms_.end() ? std::strong_ordering::less : mono_cmp(i->mono, shifted);
    if (ord > 0) {
      out.terms_.push_back(*i++);
    } else if (ord < 0) {
      out.terms_.push_back({shifted, coeff * j->coeff});
      ++j;
    } else {
      Rational sum = i->coeff + coeff * j->coeff;
      if (sum != 0) out.terms_.push_back({shifted, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  *this = add_scaled(q, 1, Monomial{});
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  *this = add_scaled(q, -1, Monomial{});
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::unordered_map<Monomial, Rational, MonoHash> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& x : p.terms_) {
    for (const auto& y : q.terms_) acc[x.mono * y.mono] += x.coeff * y.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial operator*(const Polynomial& p, const Monomial& m) {
  Polynomial out = p;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial out = 1;
  for (unsigned i = 0; i < n; ++i) out *= p;
  return out;
}

namespace {

void append_factor(std::string& out, char var, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

void append_latex_factor(std::string& out, const char* var, std::uint32_t e) {
  if (e == 0) return;
  out += var;
  if (e > 1) out += "^{" + std::to_string(e) + "}";
}

std::string latex_scalar(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  append_factor(out, 'a', m.a);
  append_factor(out, 'b', m.b);
  append_factor(out, 'c', m.c);
  return out.empty() ? "1" : out;
}

std::string to_latex(const Monomial& m) {
  std::string out;
  append_latex_factor(out, "\\alpha", m.a);
  append_latex_factor(out, "\\beta", m.b);
  append_latex_factor(out, "\\gamma", m.c);
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += modring::to_string(t.mono);
    } else {
      out += mag.get_str() + "*" + modring::to_string(t.mono);
    }
  }
  return out;
}

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += latex_scalar(mag);
    } else {
      if (mag != 1) out += latex_scalar(mag);
      out += modring::to_latex(t.mono);
    }
  }
  return out;
}

}  // namespace modring
