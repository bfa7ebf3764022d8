#include "mv/volumes.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>

#include "mv/combinatorics.hpp"
#include "mv/errors.hpp"
#include "mv/f_expansion.hpp"
#include "mv/wick.hpp"

namespace mv {

Stratum::Stratum(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  int sum = 0;
  for (int d : degrees_) {
    if (d < 0) throw InvalidStratum("stratum degrees must be nonnegative");
    sum += d;
  }
  if (sum % 2 != 0) throw InvalidStratum("stratum degrees must have an even sum, got " + std::to_string(sum));
  genus_ = (sum + 2) / 2;
}

std::vector<int> Stratum::zero_degrees() const {
  std::vector<int> out;
  std::copy_if(degrees_.begin(), degrees_.end(), std::back_inserter(out), [](int d) { return d > 0; });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int Stratum::zero_count() const {
  return static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(), [](int d) { return d > 0; }));
}

int Stratum::weight() const {
  int w = 0;
  for (int d : degrees_) {
    if (d > 0) w += d + 1;
  }
  return w;
}

std::string Stratum::key() const {
  std::string s;
  for (int d : zero_degrees()) {
    if (!s.empty()) s += ",";
    s += std::to_string(d);
  }
  return s;
}

std::string Stratum::str() const {
  std::string s = "H(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + ")";
}

namespace {

template <class Key>
struct Memo {
  std::shared_mutex mutex;
  std::map<Key, PiValue> table;

  std::optional<PiValue> find(const Key& k) {
    std::shared_lock lock(mutex);
    auto it = table.find(k);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  PiValue insert(const Key& k, PiValue v) {
    std::unique_lock lock(mutex);
    return table.try_emplace(k, std::move(v)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex);
    table.clear();
  }
};

Memo<std::vector<int>>& c_memo() {
  static Memo<std::vector<int>> memo;
  return memo;
}

Memo<std::string>& volume_memo() {
  static Memo<std::string> memo;
  return memo;
}

BigRational double_factorial(int k) {
  BigRational r(1);
  for (int i = k; i > 1; i -= 2) r *= BigRational(i);
  return r;
}

// Expands F_{m_1} x ... x F_{m_n} into canonical (sorted) partition tuples.
std::map<std::vector<Partition>, BigRational> expand_tuples(const PartMultiset& m) {
  std::vector<PLinearCombo> factors;
  factors.reserve(m.values().size());
  for (int k : m.values()) factors.push_back(capital_f(k));

  std::map<std::vector<Partition>, BigRational> tuples;
  std::vector<Partition> current;
  std::function<void(std::size_t, const BigRational&)> walk = [&](std::size_t i, const BigRational& coeff) {
    if (i == factors.size()) {
      std::vector<Partition> key = current;
      std::sort(key.begin(), key.end());
      tuples[key] += coeff;
      return;
    }
    for (const auto& [lambda, c] : factors[i]) {
      current.push_back(lambda);
      walk(i + 1, coeff * c);
      current.pop_back();
    }
  };
  walk(0, BigRational(1));
  return tuples;
}

}  // namespace

PiValue capital_f_inner_product(const PartMultiset& m, int threads, VolumeDiagnostics* diag) {
  BigRational total;
  for (const auto& [tuple, coeff] : expand_tuples(m)) {
    if (coeff.is_zero()) continue;
    WickStats stats;
    total += coeff * multi_bracket_coefficient(tuple, threads, &stats);
    if (diag) {
      ++diag->wick_evaluations;
      diag->complements += stats.complements;
      diag->nonzero_terms += stats.nonzero_terms;
    }
  }
  if (total.is_zero()) return {};
  return PiValue::monomial(total, m.bracket_exponent());
}

PiValue c_value(const PartMultiset& m, int threads, VolumeDiagnostics* diag) {
  if (auto hit = c_memo().find(m.values())) return *hit;
  BigRational norm = factorial(m.total());
  for (int k : m.values()) norm *= BigRational(k);
  return c_memo().insert(m.values(), capital_f_inner_product(m, threads, diag) / norm);
}

PiValue volume_value(const Stratum& s, const EvalOptions& opts) {
  return volume(s, opts).volume;
}

VolumeResult volume(const Stratum& s, const EvalOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (s.weight() > opts.max_weight) throw InfeasibleSize(s.weight(), opts.max_weight);

  VolumeResult result;
  result.stratum = s;
  const std::string key = s.key();
  if (auto hit = volume_memo().find(key)) {
    result.volume = *hit;
    result.diagnostics.cached = true;
  } else {
    std::vector<int> shifted = s.zero_degrees();
    for (int& d : shifted) d += 1;
    if (shifted.empty()) shifted.push_back(1);  // genus 1: c((1)) = z(2)
    const PiValue v = c_value(PartMultiset(shifted), opts.threads, &result.diagnostics) * BigRational(2);
    result.volume = volume_memo().insert(key, v);
  }
  result.prediction = prediction(s);
  result.relative_error = relative_error(s, result.volume);
  result.relative_error_text = format_significant(result.relative_error, 15);
  result.diagnostics.bracket_cache_entries = bracket_cache_size();
  result.diagnostics.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

PiValue principal_volume(int g) {
  if (g < 2) throw DomainError("principal_volume requires g >= 2");
  const int n = 2 * g - 2;
  BigRational sum;
  for (const Partition& mu : partitions_of_size(n + 2)) {
    const auto& parts = mu.parts();
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p % 2 != 0; })) continue;
    const int len = mu.length();
    BigRational term = factorial(2 * n - len + 2);
    for (const auto& [part, mult] : mu.multiplicities()) {
      if (part >= 2) term *= factorial(mult);
    }
    term = BigRational(len % 2 == 1 ? 1 : -1) / term;
    for (int p : parts) term *= double_factorial(2 * p - 3) * frak_z_coefficient(p);
    sum += term;
  }
  return PiValue::monomial(BigRational(2) * factorial(n) * sum, 2 * g);
}

BigRational prediction(const Stratum& s) {
  BigRational denom(1);
  for (int d : s.zero_degrees()) denom *= BigRational(d + 1);
  return BigRational(4) / denom;
}

BigRational relative_error(const Stratum& s, const PiValue& volume) {
  return volume.approximate() / prediction(s) - BigRational(1);
}

std::vector<std::pair<std::string, PiValue>> cached_volumes() {
  auto& memo = volume_memo();
  std::shared_lock lock(memo.mutex);
  return {memo.table.begin(), memo.table.end()};
}

void seed_volume(const Stratum& s, const PiValue& value) {
  if (!value.is_monomial() || value.exponent() != 2 * s.genus() || value.leading_coefficient().sign() <= 0) {
    throw InvalidStratum("cached volume for " + s.str() + " is not a positive multiple of pi^" +
                         std::to_string(2 * s.genus()));
  }
  volume_memo().insert(s.key(), value);
}

void clear_volume_caches() {
  c_memo().clear();
  volume_memo().clear();
  clear_bracket_cache();
}

}  // namespace mv
