#pragma once

// Siegel-Veech constants of multiplicity-one configurations, expressed as
// exact ratios of Masur-Veech volumes.
//
// Zero indices are 0-based positions in Stratum::degrees(). Values for
// configurations joining distinct zeros are rational; values for
// configurations returning to the same zero (or bounding a cylinder) are a
// rational multiple of pi^-2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mv/exact.hpp"
#include "mv/volumes.hpp"

namespace mv {

enum class SVKind { sc, sc2, loop, loop_per_angle, cyl, handle, cyl1, area1 };

std::string_view kind_name(SVKind kind);
std::optional<SVKind> parse_kind(std::string_view name);
// 0 for sc and sc2, -2 for the cylinder and loop kinds. Forced zeros carry no exponent.
int expected_pi_exponent(SVKind kind);

struct SVResult {
  SVKind kind = SVKind::sc;
  PiValue value;
  // Leading large-genus term of the constant.
  BigRational predictor;
  Stratum stratum;
  std::vector<int> zeros;
  std::optional<int> angle;
  std::vector<std::string> warnings;

  // value / predictor - 1 (pi at 100 digits); nullopt for a zero predictor.
  std::optional<BigRational> relative_deviation() const;
};

// Kontsevich-Zorich: H(2g-2) and H(g-1,g-1) have a hyperelliptic component
// for g >= 3, and all-even strata split by spin parity for g >= 4.
bool may_have_multiple_components(const Stratum& s);

// Saddle connections joining zero i to zero j (marked points allowed).
SVResult sc_constant(const Stratum& s, int i, int j, const EvalOptions& opts = {});
// Pairs of homologous saddle connections joining two fixed simple zeros of H(1^(2g-2)).
SVResult sc2_principal(int g, const EvalOptions& opts = {});
// Closed saddle connections at zero i returning at angle (2j + 1) pi, 1 <= j <= m_i - 1.
SVResult loop_per_angle(const Stratum& s, int i, int j, const EvalOptions& opts = {});
// All return angles, each unordered pair {j, m_i - j} once.
SVResult loop_constant(const Stratum& s, int i, const EvalOptions& opts = {});
// Cylinders with zero i on one boundary and zero j on the other.
SVResult cyl_constant(const Stratum& s, int i, int j, const EvalOptions& opts = {});
// Cylinders with zero i on both boundaries.
SVResult handle_constant(const Stratum& s, int i, const EvalOptions& opts = {});
// All multiplicity-one cylinders: every cyl pair i < j plus every handle.
SVResult cyl1_total(const Stratum& s, const EvalOptions& opts = {});
// cyl1_total / (dim_C - 1).
SVResult area1_constant(const Stratum& s, const EvalOptions& opts = {});

}  // namespace mv
