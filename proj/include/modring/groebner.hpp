#ifndef MODRING_GROEBNER_HPP
#define MODRING_GROEBNER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modring/polynomial.hpp"

namespace modring {

inline constexpr const char* kOrderTag = "grevlex-abc";

/// Reduced Gröbner basis under mono_cmp: monic elements sorted by leading
/// monomial, largest first.
struct GroebnerBasis {
  int genus = 0;  // 0 when the basis is not attached to a genus
  std::vector<Polynomial> elements;
  std::string order_tag = kOrderTag;

  std::vector<Monomial> leading_monomials() const;
  bool operator==(const GroebnerBasis&) const = default;
};

struct StandardMonomialBasis {
  int genus = 0;
  /// Sorted by weighted degree, then ascending mono_cmp.
  std::vector<Monomial> monomials;
};

/// Buchberger with the normal selection strategy and the coprime criterion,
/// followed by full interreduction. Zero generators are ignored; the zero
/// ideal gets an empty basis.
GroebnerBasis buchberger(std::span<const Polynomial> gens, int genus = 0);

/// Remainder of full multivariate division; always reduces by the basis
/// element with the largest dividing leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// True iff every S-polynomial of two elements reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);
/// True iff elements are monic and no term of any element is divisible by
/// another element's leading monomial.
bool is_reduced(const GroebnerBasis& gb);

/// Minimal generators of the initial ideal, i.e. the leading monomials of the
/// reduced basis, sorted descending.
std::vector<Monomial> initial_ideal_minimal_generators(const GroebnerBasis& gb);

/// Monomials outside the initial ideal. Throws std::domain_error when the
/// quotient is infinite-dimensional.
StandardMonomialBasis standard_monomials(const GroebnerBasis& gb);

/// h_w = number of standard monomials of weighted degree w, w = 0..top.
std::vector<std::int64_t> hilbert_series(const GroebnerBasis& gb);

/// Coefficients of (1-t^g)(1-t^(g+1))(1-t^(g+2)) / ((1-t)(1-t^2)(1-t^3)).
std::vector<std::int64_t> complete_intersection_hilbert(int genus);

/// Coefficient of the socle monomial gamma^(g-1) in normal_form(m).
/// Throws std::invalid_argument unless m has weighted degree 3g-3.
Rational pairing_ratio(const Monomial& m, const GroebnerBasis& gb);

/// All monomials of standard degree d, descending under mono_cmp.
std::vector<Monomial> monomials_of_degree(int d);
/// All monomials of weighted degree w, descending under mono_cmp.
std::vector<Monomial> monomials_of_weighted_degree(int w);

/// True iff each generator set reduces to zero modulo the other's Gröbner basis.
bool ideal_equal(std::span<const Polynomial> gens1, std::span<const Polynomial> gens2);

}  // namespace modring

#endif  // MODRING_GROEBNER_HPP
