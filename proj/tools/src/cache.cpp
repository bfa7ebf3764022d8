#include "mvcli/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "mv/errors.hpp"
#include "mv/volumes.hpp"
#include "mvcli/render.hpp"
#include "mvcli/stratum_spec.hpp"

namespace mvcli {

nlohmann::json cache_to_json() {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, value] : mv::cached_volumes()) entries[key] = pi_value_json(value);
  return {{"version", kCacheVersion}, {"entries", entries}};
}

void cache_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("version", 0) != kCacheVersion) {
    throw mv::InvalidStratum("unsupported cache file version");
  }
  for (const auto& [key, entry] : doc.at("entries").items()) {
    mv::seed_volume(parse_stratum(key), pi_value_from_json(entry));
  }
}

void load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw mv::InvalidStratum("cache file " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    cache_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw mv::InvalidStratum("cache file " + path.string() + " is malformed: " + e.what());
  }
}

void save_cache(const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << cache_to_json().dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::filesystem::path> resolve_cache_path(const std::string& flag_value) {
  if (const char* env = std::getenv("MV_CACHE"); env && *env) return std::filesystem::path(env);
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  return std::nullopt;
}

}  // namespace mvcli
