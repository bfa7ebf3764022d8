#pragma once

#include <stdexcept>
#include <string>

namespace mv {

// Argument outside an operation's mathematical domain (odd zeta index, k <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Degree list that does not describe a stratum of Abelian differentials.
class InvalidStratum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stratum whose weight sum(m_i + 1) exceeds the configured feasibility guard.
class InfeasibleSize : public std::runtime_error {
 public:
  InfeasibleSize(int weight, int limit)
      : std::runtime_error("stratum weight " + std::to_string(weight) +
                           " exceeds feasibility guard " + std::to_string(limit)),
        weight_(weight),
        limit_(limit) {}

  int weight() const noexcept { return weight_; }
  int limit() const noexcept { return limit_; }

 private:
  int weight_;
  int limit_;
};

}  // namespace mv
