#include <algorithm>
#include <functional>
#include <string>

#include "modring/betti.hpp"
#include "modring/chern.hpp"
#include "modring/cli/command.hpp"
#include "modring/groebner.hpp"
#include "modring/relations.hpp"
#include "modring/series.hpp"

namespace modring::cli {

namespace {

CheckReport run_check(const std::string& name, const std::function<void(CheckReport&)>& body) {
  CheckReport report{name};
  try {
    body(report);
  } catch (const std::exception& e) {
    report.fail(std::string("exception: ") + e.what());
  }
  return report;
}

std::string list(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : ", ") + to_string(m);
  return "{" + out + "}";
}

}  // namespace

std::vector<CheckReport> verify_genus(int genus) {
  const int g = genus;
  const RelationTriple triple = relations_by_recursion(g);
  const auto gens = triple.generators();
  const PowerSeries phi = phi_series(g + 3);
  const GroebnerBasis gb = buchberger(gens, g);

  std::vector<CheckReport> reports;
  reports.push_back(run_check("relations_dual_path", [&](CheckReport& r) {
    if (!relations_by_definition(g, phi).same_relations(triple)) r.fail("definition and recursion differ");
  }));
  reports.push_back(run_check("initial_terms", [&](CheckReport& r) {
    const auto got = initial_terms(triple);
    const auto want = expected_initial_terms(g);
    for (int i = 0; i < 3; ++i) {
      if (got[i] != want[i]) r.fail("In(f" + std::to_string(i + 1) + ") = " + to_string(got[i]));
      if (gens[i].leading_coeff() != 1) r.fail("f" + std::to_string(i + 1) + " is not monic");
      const auto w = gens[i].weighted_degree();
      if (!w || *w != g + i) r.fail("f" + std::to_string(i + 1) + " has wrong weighted degree");
    }
  }));
  reports.push_back(run_check("leitideal", [&](CheckReport& r) {
    if (!is_reduced(gb) || !s_pairs_reduce_to_zero(gb)) r.fail("basis is not a reduced Groebner basis");
    const auto mins = initial_ideal_minimal_generators(gb);
    if (mins != monomials_of_degree(g)) r.fail("minimal generators " + list(mins));
    const long n = g;
    if (static_cast<long>(standard_monomials(gb).monomials.size()) != n * (n + 1) * (n + 2) / 6)
      r.fail("wrong number of standard monomials");
  }));
  reports.push_back(run_check("uniqueness", [&](CheckReport& r) {
    const auto lms = gb.leading_monomials();
    for (const auto& f : gens) {
      for (std::size_t k = 1; k < f.terms().size(); ++k) {
        const Monomial& m = f.terms()[k].mono;
        if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); }))
          r.fail("tail term " + to_string(m) + " is not standard");
      }
    }
  }));
  reports.push_back(run_check("hilbert", [&](CheckReport& r) {
    const auto h = hilbert_series(gb);
    if (h != complete_intersection_hilbert(g)) r.fail("differs from the complete-intersection series");
    if (!std::equal(h.begin(), h.end(), h.rbegin())) r.fail("not palindromic");
    if (static_cast<int>(h.size()) != 3 * g - 2 || h.back() != 1) r.fail("top degree is not 3g-3 with coefficient 1");
    if (h != invariant_dimensions(g)) r.fail("differs from invariant_dimensions");
  }));
  reports.push_back(run_check("phi_ideal", [&](CheckReport& r) {
    const std::vector<Polynomial> ders{taylor_derivative(phi, g), taylor_derivative(phi, g + 1),
                                       taylor_derivative(phi, g + 2)};
    if (!ideal_equal(gens, ders)) r.fail("(f1, f2, f3) != (Phi^(g), Phi^(g+1), Phi^(g+2))");
  }));
  reports.push_back(run_check("chern_equals_phi", [&](CheckReport& r) { r.merge(chern_equals_phi(g)); }));
  reports.push_back(run_check("chern_relations", [&](CheckReport& r) { r.merge(chern_relations_check(g, gb)); }));
  reports.push_back(run_check("gamma_inclusion", [&](CheckReport& r) {
    const GroebnerBasis next = buchberger(relations_by_recursion(g + 1).generators(), g + 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!normal_form(vars::c() * gens[i], next).is_zero())
        r.fail("gamma*f" + std::to_string(i + 1) + " not in I_(g+1)");
    }
  }));
  reports.push_back(run_check("functional_equation", [&](CheckReport& r) {
    if (!functional_equation_residual(phi).is_zero()) r.fail("nonzero residual");
  }));
  if (g >= 2) {
    reports.push_back(run_check("tangent_vanishing", [&](CheckReport& r) {
      r.merge(chern_ng_vanishing(g, gb));
      const auto c1 = chern_total_ng(g, 1)[1];
      if (c1 != 2 * vars::a()) r.fail("c_1(N_g) = " + c1.to_string());
      if (normal_form(c1, gb).is_zero()) r.fail("c_1(N_g) vanishes in the quotient");
    }));
    reports.push_back(run_check("socle", [&](CheckReport& r) {
      const int top = 3 * g - 3;
      const Monomial socle{0, 0, static_cast<std::uint32_t>(g - 1)};
      std::vector<Monomial> top_standard;
      for (const auto& m : standard_monomials(gb).monomials) {
        if (m.weighted_degree() == top) top_standard.push_back(m);
      }
      if (top_standard != std::vector<Monomial>{socle}) r.fail("top standard monomials " + list(top_standard));
      for (const auto& m : monomials_of_weighted_degree(top)) {
        const Polynomial nf = normal_form(Polynomial(m), gb);
        if (!nf.is_zero() && (nf.size() != 1 || nf.leading_monomial() != socle))
          r.fail("normal form of " + to_string(m) + " is " + nf.to_string());
      }
    }));
    if (g <= kMaxBettiGenus) {
      reports.push_back(run_check("betti", [&](CheckReport& r) { r.merge(betti_cross_check(g)); }));
    }
  }
  return reports;
}

}  // namespace modring::cli
