#ifndef MODRING_CLI_CACHE_HPP
#define MODRING_CLI_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modring/groebner.hpp"

namespace modring::cli {

inline constexpr int kCacheVersion = 1;

/// On-disk form of a reduced Gröbner basis of I_g, one file per genus.
struct CacheEntry {
  int version = kCacheVersion;
  int genus = 0;
  std::string order_tag = kOrderTag;
  std::vector<std::string> elements;  // canonical polynomial text
};

void to_json(nlohmann::json& j, const CacheEntry& e);
void from_json(const nlohmann::json& j, CacheEntry& e);

CacheEntry to_cache_entry(const GroebnerBasis& gb);

std::filesystem::path cache_path(const std::filesystem::path& dir, int genus);

/// Writes through a temporary file and an atomic rename.
void save_cache(const std::filesystem::path& dir, const GroebnerBasis& gb);

/// Reads and revalidates the cached basis of I_g. Returns std::nullopt for a
/// missing, unreadable, stale or invalid entry; a returned basis is a reduced
/// Gröbner basis of exactly I_g.
std::optional<GroebnerBasis> load_cache(const std::filesystem::path& dir, int genus);

/// Fresh reduced Gröbner basis of I_g from the recursion triple.
GroebnerBasis compute_ideal_basis(int genus);

/// Cached basis if valid, otherwise computed and (re)written.
GroebnerBasis cached_ideal_basis(const std::filesystem::path& dir, int genus);

}  // namespace modring::cli

#endif  // MODRING_CLI_CACHE_HPP
