#include "modring/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace modring {

namespace {

Polynomial drop_leading(const Polynomial& p) {
  return Polynomial::from_terms({p.terms().begin() + 1, p.terms().end()});
}

const Polynomial* best_divisor(const Monomial& m, const std::vector<Polynomial>& basis) {
  const Polynomial* best = nullptr;
  for (const auto& f : basis) {
    const Monomial& lm = f.leading_monomial();
    if (!lm.divides(m)) continue;
    if (best == nullptr || mono_cmp(lm, best->leading_monomial()) > 0) best = &f;
  }
  return best;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  std::vector<Term> remainder;
  Polynomial h = p;
  while (!h.is_zero()) {
    const Term& head = h.terms().front();
    if (const Polynomial* f = best_divisor(head.mono, basis)) {
      const Rational scale = -head.coeff / f->leading_coeff();
      h = h.add_scaled(*f, scale, head.mono / f->leading_monomial());
    } else {
      remainder.push_back(head);
      h = drop_leading(h);
    }
  }
  return Polynomial::from_terms(std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial lhs = f * (l / f.leading_monomial()) * Rational(1 / f.leading_coeff());
  return lhs.add_scaled(g, Rational(-1 / g.leading_coeff()), l / g.leading_monomial());
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Normal strategy: smallest lcm first, ties by insertion indices.
bool pair_before(const Pair& x, const Pair& y) {
  if (auto c = mono_cmp(x.lcm, y.lcm); c != 0) return c < 0;
  return std::tie(x.j, x.i) < std::tie(y.j, y.i);
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading_monomial());
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, int genus) {
  std::vector<Polynomial> basis;
  for (const auto& p : gens) {
    if (!p.is_zero()) basis.push_back(p.monic());
  }

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (coprime(li, lj)) continue;
      pairs.push_back({i, j, lcm(li, lj)});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const Pair pair = *it;
    pairs.erase(it);
    Polynomial h = reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: keep one element per minimal leading monomial.
  std::sort(basis.begin(), basis.end(), [](const Polynomial& x, const Polynomial& y) {
    return mono_cmp(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : basis) {
    const Monomial& lm = p.leading_monomial();
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(lm);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }

  // Interreduce: every tail term must be standard with respect to the others.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(minimal[m]);
    }
    const Term head = minimal[k].terms().front();
    minimal[k] = (Polynomial(head.mono, head.coeff) + reduce(drop_leading(minimal[k]), others)).monic();
  }

  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& x, const Polynomial& y) {
    return mono_cmp(x.leading_monomial(), y.leading_monomial()) > 0;
  });
  return GroebnerBasis{genus, std::move(minimal), kOrderTag};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return reduce(p, gb.elements); }

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& e = gb.elements;
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(e[i].leading_monomial(), e[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(e[i], e[j]), e).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& e = gb.elements;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].is_zero() || e[k].leading_coeff() != 1) return false;
    for (std::size_t m = 0; m < e.size(); ++m) {
      if (m == k) continue;
      const Monomial& lm = e[m].leading_monomial();
      for (const auto& t : e[k].terms()) {
        if (lm.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

std::vector<Monomial> initial_ideal_minimal_generators(const GroebnerBasis& gb) {
  std::vector<Monomial> lms = gb.leading_monomials();
  std::vector<Monomial> out;
  for (const auto& m : lms) {
    const bool redundant = std::any_of(lms.begin(), lms.end(), [&](const Monomial& o) {
      return o != m && o.divides(m);
    });
    if (!redundant && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), MonoGreater{});
  return out;
}

StandardMonomialBasis standard_monomials(const GroebnerBasis& gb) {
  const auto lms = gb.leading_monomials();
  std::uint32_t pa = 0, pb = 0, pc = 0;
  for (const auto& m : lms) {
    if (m.b == 0 && m.c == 0 && m.a > 0 && (pa == 0 || m.a < pa)) pa = m.a;
    if (m.a == 0 && m.c == 0 && m.b > 0 && (pb == 0 || m.b < pb)) pb = m.b;
    if (m.a == 0 && m.b == 0 && m.c > 0 && (pc == 0 || m.c < pc)) pc = m.c;
  }
  const bool unit_ideal = std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); });
  StandardMonomialBasis out;
  out.genus = gb.genus;
  if (unit_ideal) return out;
  if (pa == 0 || pb == 0 || pc == 0) throw std::domain_error("quotient ring is infinite-dimensional");
  for (std::uint32_t a = 0; a < pa; ++a) {
    for (std::uint32_t b = 0; b < pb; ++b) {
      for (std::uint32_t c = 0; c < pc; ++c) {
        const Monomial m{a, b, c};
        const bool in_ideal = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
        if (!in_ideal) out.monomials.push_back(m);
      }
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(), [](const Monomial& x, const Monomial& y) {
    if (x.weighted_degree() != y.weighted_degree()) return x.weighted_degree() < y.weighted_degree();
    return mono_cmp(x, y) < 0;
  });
  return out;
}

std::vector<std::int64_t> hilbert_series(const GroebnerBasis& gb) {
  const auto basis = standard_monomials(gb);
  std::vector<std::int64_t> h;
  for (const auto& m : basis.monomials) {
    const auto w = static_cast<std::size_t>(m.weighted_degree());
    if (h.size() <= w) h.resize(w + 1, 0);
    ++h[w];
  }
  return h;
}

std::vector<std::int64_t> complete_intersection_hilbert(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  const int len = 3 * genus + 4;
  std::vector<std::int64_t> h(static_cast<std::size_t>(len), 0);
  h[0] = 1;
  for (int d : {genus, genus + 1, genus + 2}) {
    for (int i = len - 1; i >= d; --i) h[i] -= h[i - d];
  }
  for (int d : {1, 2, 3}) {
    for (int i = d; i < len; ++i) h[i] += h[i - d];
  }
  for (int i = 3 * genus - 2; i < len; ++i) {
    if (h[i] != 0) throw std::logic_error("complete intersection series did not terminate");
  }
  h.resize(static_cast<std::size_t>(3 * genus - 2));
  return h;
}

Rational pairing_ratio(const Monomial& m, const GroebnerBasis& gb) {
  if (gb.genus < 1) throw std::invalid_argument("pairing_ratio needs a basis attached to a genus");
  const int top = 3 * gb.genus - 3;
  if (m.weighted_degree() != top)
    throw std::invalid_argument("pairing_ratio: " + to_string(m) + " has weighted degree " +
                                std::to_string(m.weighted_degree()) + ", expected " + std::to_string(top));
  const Monomial socle{0, 0, static_cast<std::uint32_t>(gb.genus - 1)};
  return normal_form(Polynomial(m), gb).coeff(socle);
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) {
      out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                     static_cast<std::uint32_t>(d - a - b)});
    }
  }
  std::sort(out.begin(), out.end(), MonoGreater{});
  return out;
}

std::vector<Monomial> monomials_of_weighted_degree(int w) {
  std::vector<Monomial> out;
  for (int c = 0; 3 * c <= w; ++c) {
    for (int b = 0; 3 * c + 2 * b <= w; ++b) {
      out.push_back({static_cast<std::uint32_t>(w - 3 * c - 2 * b), static_cast<std::uint32_t>(b),
                     static_cast<std::uint32_t>(c)});
    }
  }
  std::sort(out.begin(), out.end(), MonoGreater{});
  return out;
}

bool ideal_equal(std::span<const Polynomial> gens1, std::span<const Polynomial> gens2) {
  const GroebnerBasis g1 = buchberger(gens1);
  const GroebnerBasis g2 = buchberger(gens2);
  auto contained = [](std::span<const Polynomial> gens, const GroebnerBasis& gb) {
    return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& p) { return normal_form(p, gb).is_zero(); });
  };
  return contained(gens1, g2) && contained(gens2, g1);
}

}  // namespace modring
