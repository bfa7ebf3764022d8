#pragma once

// The single bracket <m> = |m|! z(|m| - n + 2) + E(m) and its set-partition
// error sum E(m).

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mv/exact.hpp"

namespace mv {

// Multiset of positive integers, stored sorted in decreasing order.
class PartMultiset {
 public:
  PartMultiset() = default;
  // Throws DomainError on an empty list or a value < 1.
  explicit PartMultiset(std::vector<int> values);
  PartMultiset(std::initializer_list<int> values) : PartMultiset(std::vector<int>(values)) {}

  const std::vector<int>& values() const { return values_; }
  int count() const { return static_cast<int>(values_.size()); }
  int total() const { return total_; }
  // Grading of <m>: |m| - n + 2.
  int bracket_exponent() const { return total_ - count() + 2; }

  friend bool operator==(const PartMultiset&, const PartMultiset&) = default;
  friend auto operator<=>(const PartMultiset&, const PartMultiset&) = default;

 private:
  std::vector<int> values_;
  int total_ = 0;
};

PiValue error_term(const PartMultiset& m);
// Rational coefficient of E(m) at pi^(|m| - n + 2).
BigRational error_term_coefficient(const PartMultiset& m);

// Memoized; safe for concurrent callers.
PiValue single_bracket(const PartMultiset& m);
BigRational single_bracket_coefficient(const PartMultiset& m);
// Same as above, for a value list already sorted in decreasing order.
BigRational single_bracket_coefficient_sorted(const std::vector<int>& sorted_values);

void clear_bracket_cache();
std::size_t bracket_cache_size();

}  // namespace mv
