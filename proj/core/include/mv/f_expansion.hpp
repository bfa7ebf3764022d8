#pragma once

#include <map>

#include "mv/combinatorics.hpp"
#include "mv/exact.hpp"

namespace mv {

// Linear combination of p_lambda, keyed by canonical partition.
using PLinearCombo = std::map<Partition, BigRational>;

// F_k = k f_k = sum over wt(lambda) = k + 1 of (-k)^(l(lambda)-1) / prod_i M_i(lambda)! p_lambda.
// k = 1 uses the same formula and gives F_1 = p_1. Throws DomainError for k <= 0.
PLinearCombo capital_f(int k);

// f_k = F_k / k.
PLinearCombo frak_f(int k);

}  // namespace mv
