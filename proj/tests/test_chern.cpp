#include <doctest.h>

#include <stdexcept>

#include "modring/chern.hpp"
#include "modring/relations.hpp"
#include "modring/series.hpp"

using namespace modring;
using namespace modring::vars;

namespace {

GroebnerBasis ideal(int g) { return buchberger(relations_by_recursion(g).generators(), g); }

}  // namespace

TEST_CASE("chern_total_q low degrees") {
  const GradedClass cq = chern_total_q(3);
  CHECK(cq.label == ClassLabel::QuotientBundle);
  CHECK(cq.max_degree() == 3);
  CHECK(cq[0] == Polynomial(1));
  CHECK(cq[1] == a());
  CHECK(cq[2] == (a() * a() + b()) * make_rational(1, 2));
  CHECK(chern_total_q(0).components.size() == 1);
}

TEST_CASE("chern_total_q components are homogeneous and r! c_r is integral") {
  const GradedClass cq = chern_total_q(16);
  for (int r = 1; r <= 16; ++r) {
    CHECK(cq[r].weighted_degree() == r);
    const Polynomial scaled = cq[r] * Rational(factorial(static_cast<unsigned>(r)));
    for (const auto& t : scaled.terms()) CHECK(is_integer(t.coeff));
  }
}

TEST_CASE("chern_total_ng low degrees") {
  for (int g = 2; g <= 6; ++g) {
    const GradedClass cn = chern_total_ng(g, 3 * g - 3);
    CHECK(cn.label == ClassLabel::TangentModuli);
    CHECK(cn[0] == Polynomial(1));
    CHECK(cn[1] == 2 * a());
    CHECK(cn[2] == 2 * a() * a() + (1 - g) * b());
    for (int w = 1; w <= cn.max_degree(); ++w) CHECK(cn[w].is_weighted_homogeneous());
  }
  CHECK_THROWS_AS(chern_total_ng(1, 3), std::invalid_argument);
}

TEST_CASE("chern_equals_phi") {
  for (int g = 1; g <= 10; ++g) CHECK(chern_equals_phi(g).ok());
  const PowerSeries phi = phi_series(2);
  CHECK(chern_total_q(2)[2] == phi[2]);
}

TEST_CASE("chern_relations_check") {
  for (int g = 1; g <= 6; ++g) {
    CAPTURE(g);
    const GroebnerBasis gb = ideal(g);
    const auto report = chern_relations_check(g, gb);
    CHECK(report.ok());
    // 2 c_2 = f1 at g = 2; lower classes survive
    const GradedClass cq = chern_total_q(g + 2);
    for (int r = 1; r < g; ++r) CHECK_FALSE(normal_form(cq[r], gb).is_zero());
  }
  CHECK(chern_total_q(2)[2] * Rational(2) == relations_by_recursion(2).f1);
}

TEST_CASE("c(N_g) vanishes above weighted degree 2g-2") {
  for (int g = 2; g <= 6; ++g) {
    CAPTURE(g);
    const GroebnerBasis gb = ideal(g);
    CHECK(chern_ng_vanishing(g, gb).ok());
    const GradedClass cn = chern_total_ng(g, 3 * g - 3);
    CHECK_FALSE(normal_form(cn[1], gb).is_zero());
    CHECK_FALSE(normal_form(cn[2 * g - 2], gb).is_zero());
  }
}

TEST_CASE("top class of c(N_2) by hand") {
  // Modulo I_2: c(phi^*Q)^2 = 1 + 2a - b, (1-b)^2 = 1 - 2b, exp(k c/(1-b)) = 1 + k c,
  // so c_3(N_2) = -4ab + k c = (4 + k) c.
  const GroebnerBasis gb2 = ideal(2);
  CHECK(normal_form(chern_total_ng(2, 3, -4)[3], gb2).is_zero());
  CHECK(normal_form(chern_total_ng(2, 3, -8)[3], gb2) == -4 * c());
  CHECK_FALSE(chern_ng_vanishing(3, ideal(3), -8).ok());
}
