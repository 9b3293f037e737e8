#include "modring/betti.hpp"

#include <stdexcept>
#include <string>

namespace modring {

namespace {

void check_genus(int genus) {
  if (genus < 2 || genus > kMaxBettiGenus)
    throw std::invalid_argument("Betti tables need 2 <= genus <= " + std::to_string(kMaxBettiGenus) + ", got " +
                                std::to_string(genus));
}

}  // namespace

std::string_view to_string(BettiSource source) {
  return source == BettiSource::Recursion ? "recursion" : "enumeration";
}

std::int64_t binomial_or_zero(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BettiTable newstead_betti(int genus, int s_max) {
  check_genus(genus);
  if (s_max < 0) throw std::invalid_argument("s_max must be >= 0");
  BettiTable table{genus, {}, BettiSource::Recursion};
  auto& v = table.values;
  v.reserve(static_cast<std::size_t>(s_max) + 1);
  for (int s = 0; s <= s_max; ++s) {
    if (s < 2) {
      v.push_back(1);
      continue;
    }
    std::int64_t value = v[s - 2];
    for (int l = s - genus + 1; l <= s / 3; ++l) value += binomial_or_zero(2 * genus, 2 * l);
    v.push_back(value);
  }
  return table;
}

std::int64_t enumerate_generator_counts(int genus, int s) {
  check_genus(genus);
  if (s < 0) throw std::invalid_argument("degree index must be >= 0");
  std::int64_t count = 0;
  for (int l = 0; 2 * l <= genus - 1; ++l) {
    const std::int64_t choices = binomial_or_zero(2 * genus, 2 * l);
    for (int a = 0; a <= s; ++a) {
      for (int b = 0; a + 2 * b <= s; ++b) {
        if (a + b + 2 * l < genus - 1 && a + 2 * b + 3 * l == s) count += choices;
        const int k = genus - 1 - a - b - 2 * l;
        if (k >= 0 && a + 2 * b + 3 * k + 3 * l == s) count += choices;
      }
    }
  }
  return count;
}

CheckReport betti_cross_check(int genus) {
  CheckReport report{"betti_cross_check"};
  const int s_max = middle_index(genus);
  const BettiTable table = newstead_betti(genus, s_max);
  for (int s = 0; s <= s_max; ++s) {
    const std::int64_t counted = enumerate_generator_counts(genus, s);
    if (counted != table.values[s])
      report.fail("s=" + std::to_string(s) + ": enumeration " + std::to_string(counted) + " vs recursion " +
                  std::to_string(table.values[s]));
  }
  return report;
}

std::vector<std::int64_t> invariant_dimensions(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  std::vector<std::int64_t> dims(static_cast<std::size_t>(3 * genus - 2), 0);
  for (int a = 0; a < genus; ++a) {
    for (int b = 0; a + b < genus; ++b) {
      for (int c = 0; a + b + c < genus; ++c) ++dims[a + 2 * b + 3 * c];
    }
  }
  return dims;
}

}  // namespace modring
