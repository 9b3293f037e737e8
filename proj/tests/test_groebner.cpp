#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "modring/groebner.hpp"
#include "modring/relations.hpp"
#include "modring/series.hpp"
#include "test_support.hpp"

using namespace modring;
using namespace modring::vars;

namespace {

GroebnerBasis ideal(int g) { return buchberger(relations_by_recursion(g).generators(), g); }

std::vector<Polynomial> gens_of(int g) {
  const auto f = relations_by_recursion(g).generators();
  return {f.begin(), f.end()};
}

// Brute-force oracle: coefficients of prod(1-t^d, d=g..g+2) / prod(1-t^k, k=1..3)
// as counts of {a+2b+3c = w, a+b+c < g}, enumerated directly.
std::vector<std::int64_t> counted_hilbert(int g) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(3 * g - 2), 0);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c)
        if (a + b + c < g) ++h[a + 2 * b + 3 * c];
  return h;
}

}  // namespace

TEST_CASE("buchberger on monomial ideals") {
  const std::vector<Polynomial> abc{a(), b(), c()};
  const GroebnerBasis gb = buchberger(abc);
  CHECK(gb.elements == std::vector<Polynomial>{a(), b(), c()});
  const std::vector<Polynomial> sq{a() * a()};
  CHECK(buchberger(sq).elements == sq);
  CHECK(buchberger(std::vector<Polynomial>{Polynomial()}).elements.empty());
}

TEST_CASE("reduced basis of I_2") {
  const GroebnerBasis gb = ideal(2);
  const std::vector<Monomial> degree_two{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  CHECK(initial_ideal_minimal_generators(gb) == degree_two);
  CHECK(is_reduced(gb));
  CHECK(s_pairs_reduce_to_zero(gb));
  // beta*f1 - alpha*f2 = beta^2 - alpha*gamma, and alpha*gamma is in I_2
  CHECK(std::find(gb.elements.begin(), gb.elements.end(), b() * b()) != gb.elements.end());
}

TEST_CASE("buchberger output is independent of generator order and scaling") {
  for (int g = 2; g <= 5; ++g) {
    auto f = gens_of(g);
    const GroebnerBasis ref = buchberger(f, g);
    std::reverse(f.begin(), f.end());
    f[0] *= make_rational(-7, 3);
    f.push_back(f[1] * a() + f[2]);
    CHECK(buchberger(f, g) == ref);
  }
}

TEST_CASE("initial_ideal_minimal_generators are the degree-g monomials") {
  CHECK(initial_ideal_minimal_generators(ideal(1)) == std::vector<Monomial>{kAlpha, kBeta, kGamma});
  CHECK(initial_ideal_minimal_generators(ideal(3)).size() == 10);
  for (int g = 1; g <= 7; ++g) CHECK(initial_ideal_minimal_generators(ideal(g)) == monomials_of_degree(g));
}

TEST_CASE("normal_form") {
  const GroebnerBasis gb2 = ideal(2);
  CHECK(normal_form(a() * a(), gb2) == -b());
  CHECK(normal_form(c(), gb2) == c());
  for (int g = 1; g <= 6; ++g) {
    const GroebnerBasis gb = ideal(g);
    for (const auto& f : gens_of(g)) CHECK(normal_form(f, gb).is_zero());
  }
}

TEST_CASE("normal_form is linear, idempotent and multiplicative modulo I_g") {
  using modring::testing::random_polynomial;
  const GroebnerBasis gb = ideal(4);
  const auto lms = gb.leading_monomials();
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = random_polynomial(4, 4, 20), q = random_polynomial(4, 4, 20);
    const Rational s = modring::testing::random_rational(50);
    const Polynomial np = normal_form(p, gb);
    CHECK(normal_form(np, gb) == np);
    CHECK(normal_form(p * s + q, gb) == np * s + normal_form(q, gb));
    CHECK(normal_form(p * q, gb) == normal_form(np * normal_form(q, gb), gb));
    for (const auto& t : np.terms())
      CHECK(std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(t.mono); }));
  }
}

TEST_CASE("standard_monomials") {
  CHECK(standard_monomials(ideal(1)).monomials == std::vector<Monomial>{Monomial{}});
  CHECK(standard_monomials(ideal(2)).monomials == std::vector<Monomial>{Monomial{}, kAlpha, kBeta, kGamma});
  CHECK(standard_monomials(ideal(3)).monomials.size() == 10);
  for (int g = 1; g <= 7; ++g) {
    const auto basis = standard_monomials(ideal(g)).monomials;
    CHECK(basis.size() == static_cast<std::size_t>(g * (g + 1) * (g + 2) / 6));
    for (const auto& m : basis) CHECK(m.degree() < g);
  }
  CHECK_THROWS_AS(standard_monomials(buchberger(std::vector<Polynomial>{a()})), std::domain_error);
}

TEST_CASE("hilbert_series") {
  CHECK(hilbert_series(ideal(2)) == std::vector<std::int64_t>{1, 1, 1, 1});
  for (int g = 1; g <= 8; ++g) {
    CAPTURE(g);
    const auto h = hilbert_series(ideal(g));
    CHECK(h == counted_hilbert(g));
    CHECK(h == complete_intersection_hilbert(g));
    CHECK(h.front() == 1);
    CHECK(h.back() == 1);
    CHECK(static_cast<int>(h.size()) == 3 * g - 2);
    CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
  }
}

TEST_CASE("pairing_ratio") {
  const GroebnerBasis gb2 = ideal(2);
  CHECK(pairing_ratio(kGamma, gb2) == 1);
  CHECK(pairing_ratio({1, 1, 0}, gb2) == -1);
  CHECK(pairing_ratio({3, 0, 0}, gb2) == 1);
  CHECK_THROWS_AS(pairing_ratio(kAlpha, gb2), std::invalid_argument);
  for (int g = 2; g <= 6; ++g) CHECK(pairing_ratio({0, 0, static_cast<std::uint32_t>(g - 1)}, ideal(g)) == 1);
}

TEST_CASE("ideal_equal") {
  const std::vector<Polynomial> abc{a(), b(), c()}, bca{b(), c(), a()};
  CHECK(ideal_equal(abc, bca));
  CHECK_FALSE(ideal_equal(std::vector<Polynomial>{a()}, std::vector<Polynomial>{a() * a()}));
  const PowerSeries phi = phi_series(9);
  for (int g = 1; g <= 7; ++g) {
    const std::vector<Polynomial> ders{taylor_derivative(phi, g), taylor_derivative(phi, g + 1),
                                       taylor_derivative(phi, g + 2)};
    CHECK(ideal_equal(gens_of(g), ders));
  }
}

TEST_CASE("gamma I_g is contained in I_(g+1)") {
  for (int g = 1; g <= 6; ++g) {
    const GroebnerBasis next = ideal(g + 1);
    for (const auto& f : gens_of(g)) CHECK(normal_form(c() * f, next).is_zero());
  }
}

TEST_CASE("tails of f_i are standard monomials") {
  for (int g = 1; g <= 7; ++g) {
    const auto basis = standard_monomials(ideal(g)).monomials;
    const std::set<std::tuple<int, int, int>> standard = [&] {
      std::set<std::tuple<int, int, int>> s;
      for (const auto& m : basis) s.insert({m.a, m.b, m.c});
      return s;
    }();
    for (const auto& f : gens_of(g)) {
      for (std::size_t k = 1; k < f.size(); ++k) {
        const Monomial& m = f.terms()[k].mono;
        CHECK(standard.count({m.a, m.b, m.c}) == 1);
      }
    }
  }
}

TEST_CASE("monomial enumeration helpers") {
  CHECK(monomials_of_degree(2).size() == 6);
  CHECK(monomials_of_weighted_degree(3) == std::vector<Monomial>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}
