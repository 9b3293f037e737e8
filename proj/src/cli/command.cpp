#include "modring/cli/command.hpp"

#include <algorithm>
#include <charconv>
#include <future>

#include <json.hpp>

#include "modring/betti.hpp"
#include "modring/chern.hpp"
#include "modring/cli/cache.hpp"
#include "modring/cli/parse.hpp"
#include "modring/groebner.hpp"
#include "modring/relations.hpp"

namespace modring::cli {

using nlohmann::json;

namespace {

int to_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("invalid genus '" + s + "'");
  return v;
}

std::string poly_text(const Polynomial& p, Format f) { return f == Format::Latex ? p.to_latex() : p.to_string(); }
std::string mono_text(const Monomial& m, Format f) { return f == Format::Latex ? to_latex(m) : to_string(m); }

json string_array(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json string_array(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

GroebnerBasis ideal_basis(const Command& cmd, int genus) {
  if (cmd.cache_dir) return cached_ideal_basis(*cmd.cache_dir, genus);
  return compute_ideal_basis(genus);
}

// Result of one genus: JSON payload, human text, and whether its checks held.
struct Emitted {
  json data;
  std::string text;
  bool ok = true;
};

Emitted do_relations(const Command& cmd, int g) {
  const RelationTriple rec = relations_by_recursion(g);
  const RelationTriple def = relations_by_definition(g, phi_series(g + 2));
  const bool agree = rec.same_relations(def);
  const auto init = initial_terms(rec);
  const auto gens = rec.generators();
  std::vector<int> degrees;
  for (const auto& f : gens) degrees.push_back(f.weighted_degree().value_or(-1));
  const bool init_ok = init == expected_initial_terms(g);

  Emitted e;
  e.ok = agree && init_ok && degrees == std::vector<int>{g, g + 1, g + 2};
  e.data = json{{"genus", g},
                {"f1", rec.f1.to_string()},
                {"f2", rec.f2.to_string()},
                {"f3", rec.f3.to_string()},
                {"weighted_degrees", degrees},
                {"initial_terms", string_array(std::vector<Monomial>(init.begin(), init.end()))},
                {"paths_agree", agree}};
  std::string& t = e.text;
  if (cmd.format == Format::Latex) {
    for (int i = 0; i < 3; ++i)
      t += "f_" + std::to_string(i + 1) + "^{" + std::to_string(g) + "} &= " + gens[i].to_latex() + " \\\\\n";
  } else {
    t += "genus " + std::to_string(g) + "\n";
    for (int i = 0; i < 3; ++i) t += "f" + std::to_string(i + 1) + " = " + gens[i].to_string() + "\n";
    t += "weighted degrees: " + std::to_string(degrees[0]) + " " + std::to_string(degrees[1]) + " " +
         std::to_string(degrees[2]) + "\n";
    t += "initial terms: " + to_string(init[0]) + ", " + to_string(init[1]) + ", " + to_string(init[2]) + "\n";
    t += std::string("paths agree: ") + (agree ? "yes" : "NO") + "\n";
  }
  return e;
}

Emitted do_groebner(const Command& cmd, int g) {
  const GroebnerBasis gb = ideal_basis(cmd, g);
  const auto mins = initial_ideal_minimal_generators(gb);
  Emitted e;
  e.ok = mins == monomials_of_degree(g);
  e.data = json{{"genus", g},
                {"order_tag", gb.order_tag},
                {"elements", string_array(gb.elements)},
                {"initial_ideal", string_array(mins)}};
  e.text = cmd.format == Format::Latex ? "" : "genus " + std::to_string(g) + " (" + gb.order_tag + ")\n";
  for (const auto& p : gb.elements) e.text += poly_text(p, cmd.format) + (cmd.format == Format::Latex ? " \\\\\n" : "\n");
  if (cmd.format != Format::Latex) {
    e.text += "initial ideal:";
    for (const auto& m : mins) e.text += " " + to_string(m);
    e.text += "\n";
  }
  return e;
}

Emitted do_nf(const Command& cmd, int g) {
  if (cmd.poly.empty()) throw UsageError("nf needs --poly");
  const Polynomial p = parse_poly(cmd.poly);
  const Polynomial nf = normal_form(p, ideal_basis(cmd, g));
  Emitted e;
  e.data = json{{"genus", g}, {"input", p.to_string()}, {"normal_form", nf.to_string()}};
  e.text = poly_text(nf, cmd.format) + "\n";
  return e;
}

Emitted do_basis(const Command& cmd, int g) {
  const auto basis = standard_monomials(ideal_basis(cmd, g));
  Emitted e;
  e.data = json{{"genus", g}, {"count", basis.monomials.size()}, {"monomials", string_array(basis.monomials)}};
  for (const auto& m : basis.monomials) e.text += mono_text(m, cmd.format) + "\n";
  return e;
}

Emitted do_hilbert(const Command& cmd, int g) {
  const auto h = hilbert_series(ideal_basis(cmd, g));
  Emitted e;
  e.ok = h == complete_intersection_hilbert(g);
  e.data = json{{"genus", g}, {"coefficients", h}, {"complete_intersection", e.ok}};
  for (std::size_t w = 0; w < h.size(); ++w) e.text += std::to_string(w) + " " + std::to_string(h[w]) + "\n";
  return e;
}

Emitted do_pairing(const Command& cmd, int g) {
  if (cmd.monomial.empty()) throw UsageError("pairing needs --monomial");
  const Monomial m = parse_monomial(cmd.monomial);
  if (m.weighted_degree() != 3 * g - 3)
    throw UsageError("monomial " + to_string(m) + " has weighted degree " + std::to_string(m.weighted_degree()) +
                     ", pairing needs 3g-3 = " + std::to_string(3 * g - 3));
  const Rational ratio = pairing_ratio(m, ideal_basis(cmd, g));
  Emitted e;
  e.data = json{{"genus", g}, {"monomial", to_string(m)}, {"ratio", to_string(ratio)}};
  e.text = (cmd.format == Format::Latex ? Polynomial(ratio).to_latex() : to_string(ratio)) + "\n";
  return e;
}

Emitted do_chern(const Command& cmd, int g) {
  GradedClass cls;
  if (cmd.target == ChernTarget::Tangent) {
    if (g < 2) throw UsageError("chern --target ng needs genus >= 2");
    cls = chern_total_ng(g, cmd.degree.value_or(3 * g - 3));
  } else {
    cls = chern_total_q(cmd.degree.value_or(g + 2));
  }
  Emitted e;
  e.data = json{{"genus", g},
                {"target", std::string(to_string(cls.label))},
                {"max_degree", cls.max_degree()},
                {"components", string_array(cls.components)}};
  for (int w = 0; w <= cls.max_degree(); ++w) {
    if (cmd.format == Format::Latex) {
      e.text += "c_{" + std::to_string(w) + "} &= " + cls[w].to_latex() + " \\\\\n";
    } else {
      e.text += "c" + std::to_string(w) + " = " + cls[w].to_string() + "\n";
    }
  }
  return e;
}

Emitted do_betti(const Command& cmd, int g) {
  if (g < 2 || g > kMaxBettiGenus)
    throw UsageError("betti needs 2 <= genus <= " + std::to_string(kMaxBettiGenus));
  const int middle = middle_index(g);
  const int s_max = cmd.s_max.value_or(middle);
  if (s_max < 0) throw UsageError("--smax must be >= 0");
  const BettiTable table = newstead_betti(g, s_max);
  json rows = json::array(), counted = json::array();
  bool beyond_agree = true;
  for (int s = 0; s <= s_max; ++s) {
    const auto n = enumerate_generator_counts(g, s);
    rows.push_back({s, table.values[s]});
    counted.push_back({s, n});
    if (s > middle && n != table.values[s]) beyond_agree = false;
  }
  const CheckReport cross = betti_cross_check(g);
  Emitted e;
  e.ok = cross.ok();
  e.data = json{{"genus", g},
                {"table", rows},
                {"enumeration", counted},
                {"middle_index", middle},
                {"cross_check", cross.ok()},
                {"agree_beyond_middle", beyond_agree}};
  e.text = "genus " + std::to_string(g) + "\n";
  for (int s = 0; s <= s_max; ++s)
    e.text += "b_" + std::to_string(2 * s) + " = " + std::to_string(table.values[s]) + "\n";
  e.text += std::string("cross-check up to s=") + std::to_string(middle) + ": " + (cross.ok() ? "ok" : "FAILED") + "\n";
  return e;
}

int do_verify(const Command& cmd, std::ostream& out) {
  std::vector<std::future<std::vector<CheckReport>>> jobs;
  for (int g = cmd.genus.first; g <= cmd.genus.last; ++g)
    jobs.push_back(std::async(std::launch::async, verify_genus, g));

  bool all_ok = true;
  json genera = json::array();
  std::string text;
  for (int g = cmd.genus.first; g <= cmd.genus.last; ++g) {
    const auto reports = jobs[g - cmd.genus.first].get();
    json checks = json::object();
    for (const auto& r : reports) {
      all_ok = all_ok && r.ok();
      checks[r.name] = json{{"ok", r.ok()}, {"failures", r.failures}};
      text += "g=" + std::to_string(g) + "  " + r.name + "  " + (r.ok() ? "PASS" : "FAIL") + "\n";
      for (const auto& f : r.failures) text += "    " + f + "\n";
    }
    genera.push_back(json{{"genus", g}, {"checks", checks}});
  }
  if (cmd.format == Format::Json) {
    out << json{{"ok", all_ok}, {"genera", genera}}.dump(2) << '\n';
  } else {
    out << text << (all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
  }
  return all_ok ? kOk : kCheckFailed;
}

}  // namespace

GenusRange parse_genus_range(const std::string& text) {
  GenusRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.first = r.last = to_int(text);
  } else {
    r.first = to_int(text.substr(0, dots));
    r.last = to_int(text.substr(dots + 2));
  }
  if (r.first < 1) throw UsageError("genus must be >= 1");
  if (r.last < r.first) throw UsageError("empty genus range '" + text + "'");
  return r;
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.genus.first < 1 || cmd.genus.last < cmd.genus.first) throw UsageError("invalid genus range");
    if (cmd.verb == Verb::Verify) return do_verify(cmd, out);

    Emitted (*handler)(const Command&, int) = nullptr;
    switch (cmd.verb) {
      case Verb::Relations: handler = do_relations; break;
      case Verb::Groebner: handler = do_groebner; break;
      case Verb::Nf: handler = do_nf; break;
      case Verb::Basis: handler = do_basis; break;
      case Verb::Hilbert: handler = do_hilbert; break;
      case Verb::Pairing: handler = do_pairing; break;
      case Verb::Chern: handler = do_chern; break;
      case Verb::Betti: handler = do_betti; break;
      case Verb::Verify: break;
    }
    std::vector<Emitted> results;
    for (int g = cmd.genus.first; g <= cmd.genus.last; ++g) results.push_back(handler(cmd, g));

    const bool ok = std::all_of(results.begin(), results.end(), [](const Emitted& e) { return e.ok; });
    if (cmd.format == Format::Json) {
      if (results.size() == 1) {
        out << results.front().data.dump(2) << '\n';
      } else {
        json arr = json::array();
        for (auto& r : results) arr.push_back(std::move(r.data));
        out << arr.dump(2) << '\n';
      }
    } else {
      for (const auto& r : results) out << r.text;
    }
    return ok ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace modring::cli
