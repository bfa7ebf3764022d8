#include "mv/wick.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "mv/errors.hpp"

namespace mv {

LabeledSlotMap LabeledSlotMap::build(const std::vector<Partition>& args) {
  if (args.empty()) throw DomainError("multi-fold bracket needs at least one argument");
  LabeledSlotMap map;
  map.args = args;
  map.offsets.push_back(0);
  std::vector<int> labels;
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (args[j].length() == 0) throw DomainError("multi-fold bracket argument must be a nonempty partition");
    for (int part : args[j].parts()) {
      map.slot_values.push_back(part);
      labels.push_back(static_cast<int>(j));
    }
    map.offsets.push_back(static_cast<int>(map.slot_values.size()));
  }
  map.rho = SetPartition::from_labels(labels);
  return map;
}

std::vector<PartMultiset> LabeledSlotMap::block_values(const SetPartition& alpha) const {
  std::vector<std::vector<int>> values(static_cast<std::size_t>(alpha.length()));
  for (int u = 0; u < slot_count(); ++u) {
    values[static_cast<std::size_t>(alpha.block_of(u))].push_back(slot_values[static_cast<std::size_t>(u)]);
  }
  std::vector<PartMultiset> out;
  out.reserve(values.size());
  for (auto& v : values) out.emplace_back(std::move(v));
  return out;
}

int multi_bracket_exponent(const std::vector<Partition>& args) {
  int s = 0, t = 0;
  for (const auto& a : args) {
    s += a.size();
    t += a.length();
  }
  return s + t - 2 * static_cast<int>(args.size()) + 2;
}

namespace {

struct PartialSum {
  BigRational sum;
  WickStats stats;
};

// Sums the terms whose complement index is congruent to `worker` mod `stride`.
PartialSum sum_terms(const LabeledSlotMap& slots, int worker, int stride) {
  PartialSum out;
  ComplementEnumerator complements(slots.rho);
  std::vector<std::vector<int>> blocks;
  std::size_t index = 0;
  while (complements.next()) {
    if (static_cast<int>(index++ % static_cast<std::size_t>(stride)) != worker) continue;
    ++out.stats.complements;
    const SetPartition& alpha = complements.current();
    blocks.assign(static_cast<std::size_t>(alpha.length()), {});
    for (int u = 0; u < slots.slot_count(); ++u) {
      blocks[static_cast<std::size_t>(alpha.block_of(u))].push_back(slots.slot_values[static_cast<std::size_t>(u)]);
    }
    BigRational term(1);
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end(), std::greater<>());
      const BigRational q = single_bracket_coefficient_sorted(b);
      if (q.is_zero()) {
        term = BigRational();
        break;
      }
      term *= q;
    }
    if (term.is_zero()) continue;
    ++out.stats.nonzero_terms;
    out.sum += term;
  }
  return out;
}

}  // namespace

BigRational multi_bracket_coefficient(const std::vector<Partition>& args, int threads, WickStats* stats) {
  const LabeledSlotMap slots = LabeledSlotMap::build(args);
  const int workers = std::max(1, threads);

  std::vector<PartialSum> partials(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partials[0] = sum_terms(slots, 0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partials[static_cast<std::size_t>(w)] = sum_terms(slots, w, workers); });
    }
  }

  BigRational total;
  for (const auto& p : partials) {
    total += p.sum;
    if (stats) {
      stats->complements += p.stats.complements;
      stats->nonzero_terms += p.stats.nonzero_terms;
    }
  }
  return total;
}

PiValue multi_bracket(const std::vector<Partition>& args, int threads, WickStats* stats) {
  const BigRational q = multi_bracket_coefficient(args, threads, stats);
  if (q.is_zero()) return {};
  return PiValue::monomial(q, multi_bracket_exponent(args));
}

}  // namespace mv
