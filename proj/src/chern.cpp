#include "modring/chern.hpp"

#include <stdexcept>
#include <string>

#include "modring/relations.hpp"
#include "modring/series.hpp"

namespace modring {

namespace {

using Graded = std::vector<Polynomial>;

Graded graded_mul(const Graded& x, const Graded& y, int max_degree) {
  Graded out(static_cast<std::size_t>(max_degree) + 1);
  for (int i = 0; i <= max_degree; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= max_degree; ++j) {
      if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

// exp(X) for X without degree-0 part. The Euler operator E (multiply the
// degree-w part by w) is a derivation, so E exp(X) = E(X) exp(X), i.e.
// w e_w = sum_{j=1..w} j x_j e_{w-j}.
Graded graded_exp(const Graded& x, int max_degree) {
  Graded e(static_cast<std::size_t>(max_degree) + 1);
  e[0] = 1;
  for (int w = 1; w <= max_degree; ++w) {
    Polynomial acc;
    for (int j = 1; j <= w; ++j) {
      if (!x[j].is_zero() && !e[w - j].is_zero()) acc += x[j] * e[w - j] * Rational(j);
    }
    e[w] = acc * make_rational(1, w);
  }
  return e;
}

// (1 - beta)^e, beta in weight 2.
Graded one_minus_beta_pow(const Rational& e, int max_degree) {
  using namespace vars;
  Graded out(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; 2 * k <= max_degree; ++k) {
    out[2 * k] = pow(-b(), static_cast<unsigned>(k)) * binomial(e, static_cast<unsigned>(k));
  }
  return out;
}

void check_degree(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
}

}  // namespace

std::string_view to_string(ClassLabel label) {
  return label == ClassLabel::QuotientBundle ? "quotient_bundle" : "tangent_moduli";
}

GradedClass chern_total_q(int max_degree) {
  check_degree(max_degree);
  using namespace vars;
  // alpha + alpha sum beta^m/(2m+1) + 2 gamma sum beta^(m-1)/(2m+1); the
  // m-th summands sit in weighted degree 2m+1.
  Graded bracket(static_cast<std::size_t>(max_degree) + 1);
  if (max_degree >= 1) bracket[1] = a();
  for (int m = 1; 2 * m + 1 <= max_degree; ++m) {
    const Polynomial bm1 = pow(b(), static_cast<unsigned>(m - 1));
    bracket[2 * m + 1] = (a() * b() * bm1 + 2 * c() * bm1) * make_rational(1, 2 * m + 1);
  }
  Graded total = graded_mul(one_minus_beta_pow(make_rational(-1, 2), max_degree),
                            graded_exp(bracket, max_degree), max_degree);
  return {std::move(total), ClassLabel::QuotientBundle};
}

GradedClass chern_total_ng(int genus, int max_degree, long gamma_coefficient) {
  if (genus < 2) throw std::invalid_argument("c(N_g) needs genus >= 2, got " + std::to_string(genus));
  check_degree(max_degree);
  using namespace vars;

  // exp(k gamma/(1-beta)) = sum_j (k gamma)^j / j! * sum_i C(j+i-1, i) beta^i
  Graded gamma_factor(static_cast<std::size_t>(max_degree) + 1);
  gamma_factor[0] = 1;
  for (int j = 1; 3 * j <= max_degree; ++j) {
    const Polynomial head = pow(c() * gamma_coefficient, static_cast<unsigned>(j)) *
                            make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
    for (int i = 0; 3 * j + 2 * i <= max_degree; ++i) {
      const Integer geo = binomial(static_cast<unsigned>(j + i - 1), static_cast<unsigned>(i));
      gamma_factor[3 * j + 2 * i] += head * pow(b(), static_cast<unsigned>(i)) * Rational(geo);
    }
  }

  const Graded q = chern_total_q(max_degree).components;
  Graded total = graded_mul(one_minus_beta_pow(genus, max_degree), gamma_factor, max_degree);
  total = graded_mul(total, graded_mul(q, q, max_degree), max_degree);
  return {std::move(total), ClassLabel::TangentModuli};
}

CheckReport chern_equals_phi(int genus) {
  CheckReport report{"chern_equals_phi"};
  const int top = genus + 2;
  const PowerSeries phi = phi_series(top);
  const GradedClass cq = chern_total_q(top);
  for (int r = 0; r <= top; ++r) {
    if (cq[r] != phi[r])
      report.fail("c_" + std::to_string(r) + " = " + cq[r].to_string() + " but phi_" + std::to_string(r) + " = " +
                  phi[r].to_string());
  }
  return report;
}

CheckReport chern_relations_check(int genus, const GroebnerBasis& gb) {
  CheckReport report{"chern_relations_check"};
  const GradedClass cq = chern_total_q(genus + 2);
  std::vector<Polynomial> cs;
  for (int r = genus; r <= genus + 2; ++r) {
    cs.push_back(cq[r]);
    const Polynomial nf = normal_form(cq[r], gb);
    if (!nf.is_zero()) report.fail("c_" + std::to_string(r) + " has normal form " + nf.to_string());
  }
  const auto f = relations_by_recursion(genus).generators();
  if (!ideal_equal(cs, f)) report.fail("(c_g, c_g+1, c_g+2) and (f1, f2, f3) generate different ideals");
  return report;
}

CheckReport chern_ng_vanishing(int genus, const GroebnerBasis& gb, long gamma_coefficient) {
  CheckReport report{"chern_ng_vanishing"};
  const int top = 3 * genus - 3;
  const GradedClass cn = chern_total_ng(genus, top, gamma_coefficient);
  for (int w = 2 * genus - 1; w <= top; ++w) {
    const Polynomial nf = normal_form(cn[w], gb);
    if (!nf.is_zero()) report.fail("c_" + std::to_string(w) + "(N_g) has normal form " + nf.to_string());
  }
  return report;
}

}  // namespace modring
