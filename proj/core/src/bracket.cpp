#include "mv/bracket.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "mv/combinatorics.hpp"
#include "mv/errors.hpp"

namespace mv {

PartMultiset::PartMultiset(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("bracket argument must be nonempty");
  for (int v : values_) {
    if (v < 1) throw DomainError("bracket arguments must be positive");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
  total_ = std::accumulate(values_.begin(), values_.end(), 0);
}

namespace {

// A block of a set partition of the slots of m, reduced to what the error sum
// reads from it: the sum of its values and its cardinality.
struct BlockShape {
  int sum;
  int size;
  friend auto operator<=>(const BlockShape&, const BlockShape&) = default;
};

// Coefficient of x^degree in prod_i sum_d (S_i!/d!) z(S_i - b_i + 1 - d) x^d.
// Only d with an even, nonnegative z argument contribute.
BigRational delta_sum(const std::vector<BlockShape>& shape, int degree) {
  std::vector<BigRational> acc(static_cast<std::size_t>(degree) + 1);
  acc[0] = BigRational(1);
  std::vector<BigRational> factor(acc.size());
  std::vector<BigRational> next(acc.size());
  for (const auto& block : shape) {
    const int top = block.sum - block.size + 1;
    const BigRational block_factorial = factorial(block.sum);
    for (int d = 0; d <= degree; ++d) {
      const int arg = top - d;
      factor[static_cast<std::size_t>(d)] =
          (arg < 0 || arg % 2 != 0) ? BigRational() : block_factorial * frak_z_coefficient(arg) / factorial(d);
    }
    std::fill(next.begin(), next.end(), BigRational());
    for (int a = 0; a <= degree; ++a) {
      if (acc[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int d = 0; a + d <= degree; ++d) {
        if (factor[static_cast<std::size_t>(d)].is_zero()) continue;
        next[static_cast<std::size_t>(a + d)] += acc[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(d)];
      }
    }
    std::swap(acc, next);
  }
  return acc[static_cast<std::size_t>(degree)];
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct BracketCache {
  std::shared_mutex mutex;
  std::unordered_map<std::vector<int>, BigRational, VectorHash> table;
};

BracketCache& bracket_cache() {
  static BracketCache cache;
  return cache;
}

}  // namespace

BigRational error_term_coefficient(const PartMultiset& m) {
  if (m.bracket_exponent() % 2 != 0) return {};

  // The summand depends on alpha only through its multiset of block shapes.
  std::map<std::vector<BlockShape>, long> shapes;
  const auto& values = m.values();
  std::vector<BlockShape> shape;
  for (const SetPartition& alpha : set_partitions(m.count())) {
    if (alpha.length() < 2) continue;
    shape.assign(static_cast<std::size_t>(alpha.length()), BlockShape{0, 0});
    for (int e = 0; e < m.count(); ++e) {
      auto& b = shape[static_cast<std::size_t>(alpha.block_of(e))];
      b.sum += values[static_cast<std::size_t>(e)];
      b.size += 1;
    }
    std::sort(shape.begin(), shape.end());
    ++shapes[shape];
  }

  BigRational total;
  for (const auto& [key, multiplicity] : shapes) {
    const int len = static_cast<int>(key.size());
    BigRational term = delta_sum(key, len - 2);
    if (term.is_zero()) continue;
    term *= factorial(len - 2) * BigRational(multiplicity);
    if (len % 2 == 0) term = -term;  // (-1)^(len - 1)
    total += term;
  }
  return total;
}

PiValue error_term(const PartMultiset& m) {
  const BigRational q = error_term_coefficient(m);
  if (q.is_zero()) return {};
  return PiValue::monomial(q, m.bracket_exponent());
}

BigRational single_bracket_coefficient_sorted(const std::vector<int>& sorted_values) {
  auto& cache = bracket_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(sorted_values); it != cache.table.end()) return it->second;
  }
  const PartMultiset m(sorted_values);
  BigRational q = factorial(m.total()) * frak_z_coefficient(m.bracket_exponent()) + error_term_coefficient(m);
  std::unique_lock lock(cache.mutex);
  // Concurrent computations of the same key produce equal values; first one wins.
  return cache.table.try_emplace(m.values(), std::move(q)).first->second;
}

BigRational single_bracket_coefficient(const PartMultiset& m) { return single_bracket_coefficient_sorted(m.values()); }

PiValue single_bracket(const PartMultiset& m) {
  const BigRational q = single_bracket_coefficient(m);
  if (q.is_zero()) return {};
  return PiValue::monomial(q, m.bracket_exponent());
}

void clear_bracket_cache() {
  auto& cache = bracket_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

std::size_t bracket_cache_size() {
  auto& cache = bracket_cache();
  std::shared_lock lock(cache.mutex);
  return cache.table.size();
}

}  // namespace mv
