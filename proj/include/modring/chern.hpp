#ifndef MODRING_CHERN_HPP
#define MODRING_CHERN_HPP

#include <string_view>
#include <vector>

#include "modring/groebner.hpp"
#include "modring/polynomial.hpp"
#include "modring/report.hpp"

namespace modring {

enum class ClassLabel { QuotientBundle, TangentModuli };

std::string_view to_string(ClassLabel label);

/// Total characteristic class split by weighted degree 0..max_degree.
struct GradedClass {
  std::vector<Polynomial> components;
  ClassLabel label = ClassLabel::QuotientBundle;

  int max_degree() const { return static_cast<int>(components.size()) - 1; }
  const Polynomial& operator[](int w) const { return components.at(static_cast<std::size_t>(w)); }
};

/// Coefficient k in the exp(k gamma / (1 - beta)) factor of c(N_g). With
/// k = -4 the top class c_{3g-3}(N_g) vanishes, as it must since the Euler
/// characteristic of N_g is zero; the literal -8 leaves a nonzero multiple
/// of the socle there.
inline constexpr long kTangentGammaCoefficient = -4;

/// c(phi^*Q) = (1-beta)^(-1/2) exp[alpha + (alpha + 2 gamma/beta) sum_{m>=1} beta^m/(2m+1)]
/// through weighted degree D. Expanded degree by degree in the graded ring,
/// independently of phi_series.
GradedClass chern_total_q(int max_degree);

/// c(N_g) = (1-beta)^g exp(k gamma/(1-beta)) c(phi^*Q)^2 through weighted degree D.
/// Throws std::invalid_argument for g < 2.
GradedClass chern_total_ng(int genus, int max_degree, long gamma_coefficient = kTangentGammaCoefficient);

/// c_r(phi^*Q) == [t^r] Phi for every r <= g+2.
CheckReport chern_equals_phi(int genus);

/// c_g, c_{g+1}, c_{g+2} of phi^*Q reduce to zero modulo gb and generate the
/// same ideal as (f1, f2, f3).
CheckReport chern_relations_check(int genus, const GroebnerBasis& gb);

/// Every component of c(N_g) of weighted degree in (2g-2, 3g-3] reduces to zero.
CheckReport chern_ng_vanishing(int genus, const GroebnerBasis& gb,
                               long gamma_coefficient = kTangentGammaCoefficient);

}  // namespace modring

#endif  // MODRING_CHERN_HPP
