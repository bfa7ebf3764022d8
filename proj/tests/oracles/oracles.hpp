#pragma once

// Slow reference implementations for tests. Nothing here calls into mv_core:
// arithmetic is raw mpq_class, Bernoulli numbers come from the
// Akiyama-Tanigawa table, set partitions from plain recursion, and the error
// sum enumerates every nonnegative composition d explicitly.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

mpq_class factorial(int n);
mpq_class bernoulli(int n);
// Coefficient of pi^k in z(k) = (2 - 2^(2-k)) zeta(k); z(0) = 1, zero for odd or negative k.
mpq_class frak_z(int k);

// Every set partition of {0..n-1} as a list of blocks.
std::vector<Blocks> set_partitions(int n);
// join(a, b) is the one-block partition (plain union-find).
bool joins_to_one_block(const Blocks& a, const Blocks& b, int n);
// Filters set_partitions(n) by the length and join conditions only.
std::vector<Blocks> complements(const Blocks& rho, int n);
// Canonical labels (blocks numbered by least element) for comparisons.
std::vector<int> labels_of(const Blocks& blocks, int n);

// Coefficient of E(m) with the inner sum over every d in Delta(alpha).
mpq_class error_term(const std::vector<int>& m);
// |m|! z(|m| - n + 2) + E(m).
mpq_class single_bracket(const std::vector<int>& m);
// Sum over brute-force complements of the product of single brackets.
mpq_class multi_bracket(const std::vector<std::vector<int>>& args);

// F_k in the p basis, keyed by decreasing part lists.
std::map<std::vector<int>, mpq_class> capital_f(int k);
// Coefficient of pi^(2g) in nu(H(m)) via the slow routines above; m lists true zeros.
mpq_class volume(const std::vector<int>& m);

}  // namespace oracle
