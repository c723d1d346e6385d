#ifndef VERLINDE_CACHE_HPP
#define VERLINDE_CACHE_HPP

#include "verlinde/instanton.hpp"
#include "verlinde/monopole.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace verlinde {

// Identifies a universal-series computation; stale files never match.
struct CacheKey {
    std::string kind; // "A" or "B"
    std::string tuple_hash;
    int q_order = 0;
    int s_order = 0;
    EpsSpec spec;

    std::string file_name() const;
    nlohmann::json to_json() const;
    bool matches(const nlohmann::json& j) const;
};

// FNV-1a over the tuple labels, hex encoded.
std::string tuple_set_hash(const std::vector<std::string>& labels);

// VERLINDE_CACHE_DIR if set, else $HOME/.cache/verlinde, else ./.verlinde-cache
std::filesystem::path default_cache_directory();

CacheKey instanton_cache_key(const InstantonWindows& w, const EpsSpec& spec);
CacheKey monopole_cache_key(const MonopoleWindows& w, const EpsSpec& spec);

nlohmann::json universal_A_to_json(const UniversalSeriesA& a, const CacheKey& key);
UniversalSeriesA universal_A_from_json(const nlohmann::json& j);
// Carries the derived C series alongside B.
nlohmann::json universal_B_to_json(const UniversalSeriesB& b, const CacheKey& key);
UniversalSeriesB universal_B_from_json(const nlohmann::json& j);

// Returns nullopt when the file is absent or its key differs.
std::optional<nlohmann::json> load_cached(const std::filesystem::path& dir, const CacheKey& key);
// Writes atomically through a temporary file; returns the final path.
std::filesystem::path store_cached(const std::filesystem::path& dir, const CacheKey& key, const nlohmann::json& j);

} // namespace verlinde

#endif
