#include "modring/relations.hpp"

#include <stdexcept>
#include <string>

namespace modring {

std::string_view to_string(Construction c) {
  return c == Construction::ByDefinition ? "by_definition" : "by_recursion";
}

RelationTriple relations_by_definition(int genus, const PowerSeries& phi) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
  if (phi.order() < genus + 2)
    throw std::out_of_range("relations_by_definition(g=" + std::to_string(genus) +
                            ") needs Phi through t^" + std::to_string(genus + 2));
  using namespace vars;
  const long g = genus;
  const Polynomial d0 = taylor_derivative(phi, genus);
  const Polynomial d1 = taylor_derivative(phi, genus + 1);
  const Polynomial d2 = taylor_derivative(phi, genus + 2);

  RelationTriple out;
  out.genus = genus;
  out.construction = Construction::ByDefinition;
  out.f1 = d0;
  out.f2 = (d1 - a() * d0) * make_rational(1, g * g);
  out.f3 = (d2 - a() * d1 - (g + 1) * (g + 1) * b() * d0) * make_rational(1, 2 * g * (g + 1));
  return out;
}

RelationTriple relations_by_recursion(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
  using namespace vars;
  Polynomial f1 = a(), f2 = b(), f3 = c();
  for (long g = 1; g < genus; ++g) {
    Polynomial n1 = a() * f1 + g * g * f2;
    Polynomial n2 = b() * f1 + make_rational(2 * g, g + 1) * f3;
    Polynomial n3 = c() * f1;
    f1 = std::move(n1);
    f2 = std::move(n2);
    f3 = std::move(n3);
  }
  return {genus, std::move(f1), std::move(f2), std::move(f3), Construction::ByRecursion};
}

std::array<Monomial, 3> initial_terms(const RelationTriple& triple) {
  return {triple.f1.leading_monomial(), triple.f2.leading_monomial(), triple.f3.leading_monomial()};
}

std::array<Monomial, 3> expected_initial_terms(int genus) {
  const auto e = static_cast<std::uint32_t>(genus - 1);
  return {Monomial{e + 1, 0, 0}, Monomial{e, 1, 0}, Monomial{e, 0, 1}};
}

}  // namespace modring
