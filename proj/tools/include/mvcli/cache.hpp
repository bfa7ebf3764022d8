#pragma once

// Persistent volume table:
//   {"version": 1, "entries": {"2,1,1": {"num": "1", "den": "3780", "pi_exp": 6}, ...}}
// Keys are canonical stratum keys; nlohmann::json keeps them sorted.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace mvcli {

inline constexpr int kCacheVersion = 1;

// Snapshot of the in-process volume table.
nlohmann::json cache_to_json();
// Seeds the in-process table; every entry must be a positive multiple of pi^(2g).
// Throws mv::InvalidStratum (or nlohmann::json::exception) on malformed input.
void cache_from_json(const nlohmann::json& doc);

// Missing file is not an error.
void load_cache(const std::filesystem::path& path);
// Written through a temporary file and renamed into place.
void save_cache(const std::filesystem::path& path);

// MV_CACHE wins over the flag; empty means no persistence.
std::optional<std::filesystem::path> resolve_cache_path(const std::string& flag_value);

}  // namespace mvcli
