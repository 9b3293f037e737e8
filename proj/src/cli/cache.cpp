#include "modring/cli/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "modring/cli/parse.hpp"
#include "modring/relations.hpp"

namespace modring::cli {

void to_json(nlohmann::json& j, const CacheEntry& e) {
  j = nlohmann::json{{"version", e.version}, {"genus", e.genus}, {"order_tag", e.order_tag}, {"elements", e.elements}};
}

void from_json(const nlohmann::json& j, CacheEntry& e) {
  j.at("version").get_to(e.version);
  j.at("genus").get_to(e.genus);
  j.at("order_tag").get_to(e.order_tag);
  j.at("elements").get_to(e.elements);
}

CacheEntry to_cache_entry(const GroebnerBasis& gb) {
  CacheEntry e;
  e.genus = gb.genus;
  e.order_tag = gb.order_tag;
  for (const auto& p : gb.elements) e.elements.push_back(p.to_string());
  return e;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int genus) {
  return dir / ("ideal_g" + std::to_string(genus) + ".json");
}

void save_cache(const std::filesystem::path& dir, const GroebnerBasis& gb) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir);
  const auto target = cache_path(dir, gb.genus);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << '.'
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const auto tmp = dir / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << nlohmann::json(to_cache_entry(gb)).dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

GroebnerBasis compute_ideal_basis(int genus) {
  const auto gens = relations_by_recursion(genus).generators();
  return buchberger(gens, genus);
}

std::optional<GroebnerBasis> load_cache(const std::filesystem::path& dir, int genus) {
  std::ifstream in(cache_path(dir, genus));
  if (!in) return std::nullopt;
  try {
    const CacheEntry entry = nlohmann::json::parse(in).get<CacheEntry>();
    if (entry.version != kCacheVersion || entry.genus != genus || entry.order_tag != kOrderTag) return std::nullopt;
    GroebnerBasis gb;
    gb.genus = genus;
    for (const auto& text : entry.elements) {
      Polynomial p = parse_poly(text);
      if (p.is_zero()) return std::nullopt;
      gb.elements.push_back(std::move(p));
    }
    if (gb.elements.empty() || !is_reduced(gb) || !s_pairs_reduce_to_zero(gb)) return std::nullopt;
    for (const auto& f : relations_by_recursion(genus).generators()) {
      if (!normal_form(f, gb).is_zero()) return std::nullopt;
    }
    // I_g is inside the stored ideal; equal dimension forces equality.
    const auto basis = standard_monomials(gb);
    const auto g = static_cast<long>(genus);
    if (static_cast<long>(basis.monomials.size()) != g * (g + 1) * (g + 2) / 6) return std::nullopt;
    const GroebnerBasis sorted = [&] {
      GroebnerBasis s = gb;
      std::sort(s.elements.begin(), s.elements.end(), [](const Polynomial& x, const Polynomial& y) {
        return mono_cmp(x.leading_monomial(), y.leading_monomial()) > 0;
      });
      return s;
    }();
    return sorted;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

GroebnerBasis cached_ideal_basis(const std::filesystem::path& dir, int genus) {
  if (auto gb = load_cache(dir, genus)) return *std::move(gb);
  GroebnerBasis gb = compute_ideal_basis(genus);
  save_cache(dir, gb);
  return gb;
}

}  // namespace modring::cli
