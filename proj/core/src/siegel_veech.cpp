#include "mv/siegel_veech.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "mv/errors.hpp"

namespace mv {

namespace {

constexpr std::array<std::pair<SVKind, std::string_view>, 8> kNames{{
    {SVKind::sc, "sc"},
    {SVKind::sc2, "sc2"},
    {SVKind::loop, "loop"},
    {SVKind::loop_per_angle, "loop_per_angle"},
    {SVKind::cyl, "cyl"},
    {SVKind::handle, "handle"},
    {SVKind::cyl1, "cyl1"},
    {SVKind::area1, "area1"},
}};

const char* const kTorusWarning = "uses the torus convention nu(H()) = pi^2/3";
const char* const kComponentsWarning = "stratum may be disconnected; value mixes all components";

void check_index(const Stratum& s, int i) {
  const int n = static_cast<int>(s.degrees().size());
  if (i < 0 || i >= n) {
    throw DomainError("zero index " + std::to_string(i + 1) + " out of range for " + s.str());
  }
}

void check_pair(const Stratum& s, int i, int j) {
  check_index(s, i);
  check_index(s, j);
  if (i == j) throw DomainError("zero indices must be distinct");
}

// Degrees of s with entries at `drop` removed and `extra` appended.
Stratum replace(const Stratum& s, std::initializer_list<int> drop, std::initializer_list<int> extra) {
  std::vector<int> out;
  const auto& d = s.degrees();
  for (int k = 0; k < static_cast<int>(d.size()); ++k) {
    if (std::find(drop.begin(), drop.end(), k) == drop.end()) out.push_back(d[k]);
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return Stratum(std::move(out));
}

SVResult start(SVKind kind, const Stratum& s, std::vector<int> zeros) {
  SVResult r;
  r.kind = kind;
  r.stratum = s;
  r.zeros = std::move(zeros);
  if (may_have_multiple_components(s)) r.warnings.emplace_back(kComponentsWarning);
  return r;
}

void note_torus(SVResult& r, const Stratum& smaller) {
  if (smaller.genus() == 1 &&
      std::find(r.warnings.begin(), r.warnings.end(), kTorusWarning) == r.warnings.end()) {
    r.warnings.emplace_back(kTorusWarning);
  }
}

void merge_warnings(SVResult& into, const SVResult& from) {
  for (const auto& w : from.warnings) {
    if (std::find(into.warnings.begin(), into.warnings.end(), w) == into.warnings.end()) into.warnings.push_back(w);
  }
}

PiValue ratio(const Stratum& top, const Stratum& bottom, const EvalOptions& opts) {
  return volume_value(top, opts) / volume_value(bottom, opts);
}

int dim_minus_two(const Stratum& s) {
  if (s.genus() < 2) throw DomainError("cylinder constants require genus >= 2, got " + s.str());
  return s.dim_complex() - 2;
}

}  // namespace

std::string_view kind_name(SVKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<SVKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

int expected_pi_exponent(SVKind kind) {
  return kind == SVKind::sc || kind == SVKind::sc2 ? 0 : -2;
}

std::optional<BigRational> SVResult::relative_deviation() const {
  if (predictor.is_zero()) return std::nullopt;
  return value.approximate() / predictor - BigRational(1);
}

bool may_have_multiple_components(const Stratum& s) {
  const auto m = s.zero_degrees();
  const int g = s.genus();
  if (g >= 3 && m.size() == 1) return true;
  if (g >= 3 && m.size() == 2 && m[0] == m[1]) return true;
  if (g >= 4 && std::all_of(m.begin(), m.end(), [](int d) { return d % 2 == 0; })) return true;
  return false;
}

SVResult sc_constant(const Stratum& s, int i, int j, const EvalOptions& opts) {
  check_pair(s, i, j);
  const int mi = s.degrees()[i];
  const int mj = s.degrees()[j];
  SVResult r = start(SVKind::sc, s, {i, j});
  const Stratum merged = replace(s, {i, j}, {mi + mj});
  r.value = BigRational(mi + mj + 1) * ratio(merged, s, opts);
  r.predictor = BigRational(mi + 1) * BigRational(mj + 1);
  return r;
}

SVResult sc2_principal(int g, const EvalOptions& opts) {
  if (g < 2) throw DomainError("sc2 requires g >= 2, got " + std::to_string(g));
  const Stratum top(std::vector<int>(2 * g - 2, 1));
  SVResult r = start(SVKind::sc2, top, {});
  // The g1 = 1 term always involves the torus.
  r.warnings.emplace_back(kTorusWarning);
  const PiValue denom = volume_value(top, opts);
  BigRational coefficient_sum;
  for (int g1 = 1; g1 <= g - 1; ++g1) {
    const int g2 = g - g1;
    const BigRational a = factorial(2 * g - 4) * factorial(4 * g1 - 3) * factorial(4 * g2 - 3) /
                          (factorial(2 * g1 - 2) * factorial(2 * g2 - 2) * factorial(4 * g - 5));
    const Stratum s1(std::vector<int>(2 * g1 - 2, 1));
    const Stratum s2(std::vector<int>(2 * g2 - 2, 1));
    r.value += a * (volume_value(s1, opts) * volume_value(s2, opts) / denom);
    coefficient_sum += a;
  }
  r.value /= BigRational(4);
  r.predictor = BigRational(4) * coefficient_sum;
  return r;
}

SVResult loop_per_angle(const Stratum& s, int i, int j, const EvalOptions& opts) {
  check_index(s, i);
  const int mi = s.degrees()[i];
  SVResult r = start(SVKind::loop_per_angle, s, {i});
  r.angle = j;
  if (mi < 2) return r;  // a simple zero has no closed saddle connection of multiplicity one
  if (j < 1 || j > mi - 1) {
    throw DomainError("angle index must lie in 1.." + std::to_string(mi - 1) + ", got " + std::to_string(j));
  }
  const int b1 = j - 1;
  const int b2 = mi - j - 1;
  const bool symmetric = b1 == b2;
  const Stratum split = replace(s, {i}, {b1, b2});
  note_torus(r, split);
  r.value = BigRational(b1 + 1) * BigRational(b2 + 1) * ratio(split, s, opts);
  r.predictor = BigRational(mi + 1);
  if (symmetric) {
    r.value /= BigRational(2);
    r.predictor /= BigRational(2);
  }
  return r;
}

SVResult loop_constant(const Stratum& s, int i, const EvalOptions& opts) {
  check_index(s, i);
  const int mi = s.degrees()[i];
  SVResult r = start(SVKind::loop, s, {i});
  if (mi < 2) return r;
  for (int j = 1; 2 * j <= mi; ++j) {
    const SVResult part = loop_per_angle(s, i, j, opts);
    r.value += part.value;
    merge_warnings(r, part);
  }
  r.predictor = BigRational(mi + 1) * BigRational(mi - 1) / BigRational(2);
  return r;
}

SVResult cyl_constant(const Stratum& s, int i, int j, const EvalOptions& opts) {
  check_pair(s, i, j);
  const int mi = s.degrees()[i];
  const int mj = s.degrees()[j];
  if (mi < 1 || mj < 1) throw DomainError("cylinder boundaries need true zeros, not marked points");
  const int dm2 = dim_minus_two(s);
  SVResult r = start(SVKind::cyl, s, {i, j});
  const Stratum lowered = replace(s, {i, j}, {mi - 1, mj - 1});
  note_torus(r, lowered);
  r.value = BigRational(mi * mj, dm2) * ratio(lowered, s, opts);
  r.predictor = BigRational((mi + 1) * (mj + 1), dm2);
  return r;
}

SVResult handle_constant(const Stratum& s, int i, const EvalOptions& opts) {
  check_index(s, i);
  const int mi = s.degrees()[i];
  if (mi < 1) throw DomainError("handle constant needs a true zero, not a marked point");
  const int dm2 = dim_minus_two(s);
  SVResult r = start(SVKind::handle, s, {i});
  r.predictor = BigRational((mi + 1) * (mi - 1), 2 * dm2);
  if (mi == 1) return r;
  const Stratum lowered = replace(s, {i}, {mi - 2});
  note_torus(r, lowered);
  r.value = BigRational((mi - 1) * (mi - 1), 2 * dm2) * ratio(lowered, s, opts);
  return r;
}

SVResult cyl1_total(const Stratum& s, const EvalOptions& opts) {
  const int dm2 = dim_minus_two(s);
  SVResult r = start(SVKind::cyl1, s, {});
  const auto& d = s.degrees();
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (d[j] == 0) continue;
      const SVResult part = cyl_constant(s, i, j, opts);
      r.value += part.value;
      merge_warnings(r, part);
    }
    const SVResult part = handle_constant(s, i, opts);
    r.value += part.value;
    merge_warnings(r, part);
  }
  r.predictor = (BigRational(dm2) - BigRational(1, dm2)) / BigRational(2);
  return r;
}

SVResult area1_constant(const Stratum& s, const EvalOptions& opts) {
  SVResult r = cyl1_total(s, opts);
  r.kind = SVKind::area1;
  r.value /= BigRational(s.dim_complex() - 1);
  r.predictor = BigRational(1, 2);
  return r;
}

}  // namespace mv
