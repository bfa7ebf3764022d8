#include "mv/f_expansion.hpp"

#include "mv/errors.hpp"

namespace mv {

PLinearCombo capital_f(int k) {
  if (k <= 0) throw DomainError("F_k is defined for k >= 1, got " + std::to_string(k));
  PLinearCombo out;
  for (const Partition& lambda : partitions_of_weight(k + 1)) {
    BigRational c = pow(BigRational(-k), lambda.length() - 1);
    for (const auto& [part, mult] : lambda.multiplicities()) c /= factorial(mult);
    out.emplace(lambda, std::move(c));
  }
  return out;
}

PLinearCombo frak_f(int k) {
  PLinearCombo out = capital_f(k);
  for (auto& [lambda, c] : out) c /= BigRational(k);
  return out;
}

}  // namespace mv
