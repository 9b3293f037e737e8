#ifndef MODRING_BETTI_HPP
#define MODRING_BETTI_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "modring/report.hpp"

namespace modring {

enum class BettiSource { Recursion, Enumeration };

std::string_view to_string(BettiSource source);

/// Even Betti numbers g_{2s} = dim H^{2s}(N_g), s = 0..values.size()-1.
struct BettiTable {
  int genus = 2;
  std::vector<std::int64_t> values;
  BettiSource source = BettiSource::Recursion;
};

/// Largest genus whose tables fit comfortably in 64-bit counts.
inline constexpr int kMaxBettiGenus = 25;

/// floor((3g-1)/2), the range where the generators are independent.
constexpr int middle_index(int genus) { return (3 * genus - 1) / 2; }

/// C(n, k), zero outside 0 <= k <= n.
std::int64_t binomial_or_zero(int n, int k);

/// Newstead's recursion seeded with g_0 = g_2 = 1:
///   g_{2s} = g_{2s-4} + sum_{l=s-g+1}^{floor(s/3)} C(2g, 2l),   s >= 2.
/// Throws std::invalid_argument for g outside [2, kMaxBettiGenus] or s_max < 0.
BettiTable newstead_betti(int genus, int s_max);

/// Number of generators of real degree 2s of the form
///   alpha^a beta^b psi_I          with a+b+2l < g-1,       a+2b+3l = s
///   alpha^a beta^b gamma^k psi_I  with a+b+k+2l = g-1,     a+2b+3k+3l = s
/// each counted C(2g, 2l) times for the choice of |I| = 2l indices.
std::int64_t enumerate_generator_counts(int genus, int s);

/// Enumeration agrees with the recursion for every s <= middle_index(g).
CheckReport betti_cross_check(int genus);

/// Dimension of <alpha, beta, gamma> in each weighted degree, counted
/// directly from {a+b+c < g}.
std::vector<std::int64_t> invariant_dimensions(int genus);

}  // namespace modring

#endif  // MODRING_BETTI_HPP
