#ifndef MODRING_RELATIONS_HPP
#define MODRING_RELATIONS_HPP

#include <array>
#include <string_view>

#include "modring/polynomial.hpp"
#include "modring/series.hpp"

namespace modring {

enum class Construction { ByDefinition, ByRecursion };

std::string_view to_string(Construction c);

/// Generators (f1, f2, f3) of the relation ideal I_g, weighted-homogeneous
/// of weighted degrees g, g+1, g+2.
struct RelationTriple {
  int genus = 1;
  Polynomial f1;
  Polynomial f2;
  Polynomial f3;
  Construction construction = Construction::ByRecursion;

  std::array<Polynomial, 3> generators() const { return {f1, f2, f3}; }

  /// Term-for-term equality of the polynomials; the construction tag is ignored.
  bool same_relations(const RelationTriple& other) const {
    return genus == other.genus && f1 == other.f1 && f2 == other.f2 && f3 == other.f3;
  }
};

/// f1 = Phi^(g), f2 = (Phi^(g+1) - alpha Phi^(g)) / g^2,
/// f3 = (Phi^(g+2) - alpha Phi^(g+1) - (g+1)^2 beta Phi^(g)) / (2g(g+1)).
/// Throws std::invalid_argument for g < 1, std::out_of_range if phi.order() < g+2.
RelationTriple relations_by_definition(int genus, const PowerSeries& phi);

/// Iterates f1' = alpha f1 + g^2 f2, f2' = beta f1 + 2g/(g+1) f3, f3' = gamma f1
/// from (alpha, beta, gamma). Throws std::invalid_argument for g < 1.
RelationTriple relations_by_recursion(int genus);

/// Leading monomials of (f1, f2, f3) under mono_cmp.
std::array<Monomial, 3> initial_terms(const RelationTriple& triple);

/// (alpha^g, alpha^(g-1) beta, alpha^(g-1) gamma).
std::array<Monomial, 3> expected_initial_terms(int genus);

}  // namespace modring

#endif  // MODRING_RELATIONS_HPP
