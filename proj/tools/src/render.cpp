#include "mvcli/render.hpp"

#include <sstream>

#include "mv/errors.hpp"

namespace mvcli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "exact") return Format::exact;
  if (name == "decimal") return Format::decimal;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string render_value(const mv::PiValue& v, Format f, int digits) {
  if (f == Format::decimal) return v.to_decimal(digits);
  return v.str();
}

nlohmann::json pi_value_json(const mv::PiValue& v) {
  if (v.is_zero()) return {{"num", "0"}, {"den", "1"}, {"pi_exp", 0}};
  const mv::BigRational& c = v.leading_coefficient();
  return {{"num", c.numerator_str()}, {"den", c.denominator_str()}, {"pi_exp", *v.exponent()}};
}

mv::PiValue pi_value_from_json(const nlohmann::json& j) {
  const mv::BigRational c = mv::BigRational::parse(j.at("num").get<std::string>(), j.at("den").get<std::string>());
  return mv::PiValue::monomial(c, j.at("pi_exp").get<int>());
}

nlohmann::json volume_json(const mv::VolumeResult& r, int digits) {
  nlohmann::json j = pi_value_json(r.volume);
  j["stratum"] = r.stratum.str();
  j["genus"] = r.stratum.genus();
  j["decimal"] = r.volume.to_decimal(digits);
  j["prediction"] = r.prediction.str();
  j["relative_error"] = r.relative_error_text;
  return j;
}

nlohmann::json sv_json(const mv::SVResult& r, int digits) {
  nlohmann::json j = pi_value_json(r.value);
  j["kind"] = std::string(mv::kind_name(r.kind));
  j["stratum"] = r.stratum.str();
  nlohmann::json zeros = nlohmann::json::array();
  for (int z : r.zeros) zeros.push_back(z + 1);
  j["zeros"] = zeros;
  if (r.angle) j["angle"] = *r.angle;
  j["pi_exp_class"] = mv::expected_pi_exponent(r.kind);
  j["decimal"] = r.value.to_decimal(digits);
  j["predictor"] = r.predictor.str();
  if (auto dev = r.relative_deviation()) j["relative_deviation"] = mv::format_significant(*dev, 15);
  j["warnings"] = r.warnings;
  return j;
}

std::string render_sv_text(const mv::SVResult& r, Format f, int digits) {
  std::ostringstream os;
  os << mv::kind_name(r.kind) << " " << r.stratum.str();
  if (!r.zeros.empty()) {
    os << " zeros ";
    for (std::size_t k = 0; k < r.zeros.size(); ++k) os << (k ? "," : "") << r.zeros[k] + 1;
  }
  if (r.angle) os << " angle " << *r.angle;
  os << "\n";
  os << "value: " << render_value(r.value, f, digits) << "\n";
  os << "pi exponent class: " << mv::expected_pi_exponent(r.kind) << "\n";
  os << "predictor: " << r.predictor.str() << "\n";
  if (auto dev = r.relative_deviation()) os << "relative deviation: " << mv::format_significant(*dev, 15) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace mvcli
