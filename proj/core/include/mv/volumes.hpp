#pragma once

// Masur-Veech volumes nu_1(H_1(m)) = 2 c(m + 1), the closed form for the
// principal stratum, and the large-genus predictor 4 / prod(m_i + 1).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mv/bracket.hpp"
#include "mv/exact.hpp"

namespace mv {

// Stratum H(m). Degree 0 entries are marked points; they are kept for
// indexing but do not change genus, dimension or volume.
class Stratum {
 public:
  Stratum() = default;
  // Throws InvalidStratum on negative degrees or an odd degree sum.
  explicit Stratum(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  // Positive degrees, decreasing.
  std::vector<int> zero_degrees() const;
  int genus() const { return genus_; }
  // Number of true zeros.
  int zero_count() const;
  // 2g + n - 1 with n the number of true zeros.
  int dim_complex() const { return 2 * genus_ + zero_count() - 1; }
  // sum(m_i + 1) over true zeros.
  int weight() const;

  // Canonical cache key: positive degrees, decreasing, comma separated.
  std::string key() const;
  // "H(2,1,1)" with degrees as given.
  std::string str() const;

 private:
  std::vector<int> degrees_;
  int genus_ = 1;
};

struct EvalOptions {
  int threads = 1;
  int max_weight = 14;
};

struct VolumeDiagnostics {
  std::size_t wick_evaluations = 0;
  std::size_t complements = 0;
  std::size_t nonzero_terms = 0;
  std::size_t bracket_cache_entries = 0;
  bool cached = false;
  double elapsed_ms = 0.0;
};

struct VolumeResult {
  Stratum stratum;
  PiValue volume;
  BigRational prediction;
  // epsilon(m) with volume = prediction * (1 + epsilon).
  BigRational relative_error;
  std::string relative_error_text;  // 15 significant digits
  VolumeDiagnostics diagnostics;
};

// <F_{m_1} | ... | F_{m_n}> expanded multilinearly in the p_lambda basis.
PiValue capital_f_inner_product(const PartMultiset& m, int threads = 1, VolumeDiagnostics* diag = nullptr);

// c(m) = <F_{m_1} | ... | F_{m_n}> / (|m|! prod m_i). Memoized per multiset.
PiValue c_value(const PartMultiset& m, int threads = 1, VolumeDiagnostics* diag = nullptr);

// Throws InfeasibleSize when s.weight() > opts.max_weight, cached or not.
VolumeResult volume(const Stratum& s, const EvalOptions& opts = {});
// Volume only; same caching and guard as volume().
PiValue volume_value(const Stratum& s, const EvalOptions& opts = {});

// Closed form for nu_1(H_1(1^(2g-2))) as a sum over even partitions of 2g.
PiValue principal_volume(int g);

// 4 / prod(m_i + 1) over true zeros.
BigRational prediction(const Stratum& s);
// volume * prod(m_i + 1) / 4 - 1, with pi replaced by its 100-digit approximation.
BigRational relative_error(const Stratum& s, const PiValue& volume);

// Volume table shared by all callers, keyed by Stratum::key().
std::vector<std::pair<std::string, PiValue>> cached_volumes();
// Throws InvalidStratum unless value is a positive monomial of exponent 2g.
void seed_volume(const Stratum& s, const PiValue& value);
void clear_volume_caches();

}  // namespace mv
