#pragma once

// Multi-fold inner product <p_lambda(1) | ... | p_lambda(n)> as a sum over set
// partitions complementary to the interval partition rho of the slots.

#include <cstddef>
#include <vector>

#include "mv/bracket.hpp"
#include "mv/combinatorics.hpp"
#include "mv/exact.hpp"

namespace mv {

// Global slot u (0-based) carries part k of argument j, with u = L_{j-1} + k.
// rho groups the slots of each argument into one consecutive block.
struct LabeledSlotMap {
  std::vector<Partition> args;
  std::vector<int> slot_values;
  std::vector<int> offsets;  // L_0 = 0, L_1, ..., L_n
  SetPartition rho;

  // Throws DomainError for an empty list or an empty argument partition.
  static LabeledSlotMap build(const std::vector<Partition>& args);

  int slot_count() const { return static_cast<int>(slot_values.size()); }
  // Values lambda_{alpha(i)} carried by each block of alpha, in block order.
  std::vector<PartMultiset> block_values(const SetPartition& alpha) const;
};

struct WickStats {
  std::size_t complements = 0;
  std::size_t nonzero_terms = 0;
};

// Exponent S + T - 2n + 2 of the (homogeneous) multi-fold bracket.
int multi_bracket_exponent(const std::vector<Partition>& args);

// Terms may be split over `threads` workers; the exact sum does not depend on it.
PiValue multi_bracket(const std::vector<Partition>& args, int threads = 1, WickStats* stats = nullptr);
BigRational multi_bracket_coefficient(const std::vector<Partition>& args, int threads = 1,
                                      WickStats* stats = nullptr);

}  // namespace mv
