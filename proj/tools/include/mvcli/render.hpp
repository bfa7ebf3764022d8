#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mv/siegel_veech.hpp"
#include "mv/volumes.hpp"

namespace mvcli {

enum class Format { exact, decimal, json };

std::optional<Format> parse_format(std::string_view name);

inline constexpr int kDefaultDigits = 50;
// The embedded pi carries 100 digits; beyond 90 the tail is not trustworthy.
inline constexpr int kMaxDigits = 90;

std::string render_value(const mv::PiValue& v, Format f, int digits);

nlohmann::json pi_value_json(const mv::PiValue& v);
// Inverse of pi_value_json for monomials and zero.
mv::PiValue pi_value_from_json(const nlohmann::json& j);

nlohmann::json volume_json(const mv::VolumeResult& r, int digits);
nlohmann::json sv_json(const mv::SVResult& r, int digits);

// Multi-line plain text.
std::string render_sv_text(const mv::SVResult& r, Format f, int digits);

}  // namespace mvcli
