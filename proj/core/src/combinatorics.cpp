#include "mv/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mv/errors.hpp"

namespace mv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

// Partitions of n into at most max_len parts, each in [min_part, max_part].
void build_partitions(int n, int max_part, int min_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    build_partitions(n - p, p, min_part, prefix, out);
    prefix.pop_back();
  }
}

void build_compositions(int n, int k, int min_entry, Composition& prefix, std::vector<Composition>& out) {
  if (k == 1) {
    if (n >= min_entry) {
      prefix.push_back(n);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int a = min_entry; a <= n - min_entry * (k - 1); ++a) {
    prefix.push_back(a);
    build_compositions(n - a, k - 1, min_entry, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_size(int n) {
  if (n < 0) throw DomainError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  build_partitions(n, n, 1, prefix, out);
  return out;
}

std::vector<Partition> partitions_of_size(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : partitions_of_size(n)) {
    if (p.length() == k) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Partition> partitions_of_weight(int w) {
  if (w < 2) throw DomainError("partition weight must be at least 2");
  // lambda_i + 1 >= 2 partitions w; shift each part back down by one.
  std::vector<Partition> shifted;
  std::vector<int> prefix;
  build_partitions(w, w, 2, prefix, shifted);
  std::vector<Partition> out;
  out.reserve(shifted.size());
  for (const auto& s : shifted) {
    std::vector<int> parts = s.parts();
    for (int& p : parts) --p;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Composition> compositions(int n, int k) {
  if (n < 1 || k < 1) throw DomainError("compositions require n >= 1 and k >= 1");
  std::vector<Composition> out;
  if (k > n) return out;
  Composition prefix;
  build_compositions(n, k, 1, prefix, out);
  return out;
}

std::vector<Composition> nonneg_compositions(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("nonnegative compositions require n >= 0 and k >= 1");
  std::vector<Composition> out;
  Composition prefix;
  build_compositions(n, k, 0, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition sp;
  sp.labels_.resize(labels.size());
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = renumber.try_emplace(labels[i], static_cast<int>(renumber.size()));
    sp.labels_[i] = it->second;
  }
  sp.length_ = static_cast<int>(renumber.size());
  return sp;
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  std::vector<int> labels(n, -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].empty()) throw DomainError("set partition blocks must be nonempty");
    for (int e : blocks[bi]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n || labels[static_cast<std::size_t>(e)] != -1) {
        throw DomainError("blocks do not partition {0.." + std::to_string(n) + "-1}");
      }
      labels[static_cast<std::size_t>(e)] = static_cast<int>(bi);
    }
  }
  return from_labels(labels);
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

SetPartition SetPartition::single_block(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(length_));
  for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i));
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(length_), 0);
  for (int l : labels_) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

std::string SetPartition::str() const {
  std::string s = "(";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) s += ",";
    first_block = false;
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(b[i] + 1);
    }
    s += "}";
  }
  return s + ")";
}

std::vector<int> NonreducedSetPartition::block_size_profile() const {
  std::vector<int> profile;
  profile.reserve(blocks.size());
  for (const auto& b : blocks) profile.push_back(static_cast<int>(b.size()));
  return profile;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

void require_same_ground(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) throw DomainError("set partitions over different ground sets");
}

}  // namespace

SetPartition join(const SetPartition& a, const SetPartition& b) {
  require_same_ground(a, b);
  const int n = a.ground_size();
  DisjointSets ds(n);
  std::vector<int> first_a(static_cast<std::size_t>(a.length()), -1), first_b(static_cast<std::size_t>(b.length()), -1);
  for (int e = 0; e < n; ++e) {
    for (auto [sp, first] : {std::pair{&a, &first_a}, std::pair{&b, &first_b}}) {
      int& f = (*first)[static_cast<std::size_t>(sp->block_of(e))];
      if (f < 0) f = e;
      else ds.unite(e, f);
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) labels[static_cast<std::size_t>(e)] = ds.find(e);
  return SetPartition::from_labels(labels);
}

bool refines(const SetPartition& a, const SetPartition& b) {
  require_same_ground(a, b);
  std::vector<int> image(static_cast<std::size_t>(a.length()), -1);
  for (int e = 0; e < a.ground_size(); ++e) {
    int& img = image[static_cast<std::size_t>(a.block_of(e))];
    if (img < 0) img = b.block_of(e);
    else if (img != b.block_of(e)) return false;
  }
  return true;
}

bool is_transverse(const SetPartition& a, const SetPartition& b) {
  require_same_ground(a, b);
  std::vector<char> seen(static_cast<std::size_t>(a.length()) * static_cast<std::size_t>(b.length()), 0);
  for (int e = 0; e < a.ground_size(); ++e) {
    auto idx = static_cast<std::size_t>(a.block_of(e)) * static_cast<std::size_t>(b.length()) +
               static_cast<std::size_t>(b.block_of(e));
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return true;
}

bool are_complementary(const SetPartition& a, const SetPartition& b) {
  require_same_ground(a, b);
  return a.length() + b.length() == a.ground_size() + 1 && join(a, b).length() == 1;
}

// ---------------------------------------------------------------------------
// SetPartitionEnumerator

SetPartitionEnumerator::SetPartitionEnumerator(int n)
    : labels_(static_cast<std::size_t>(std::max(n, 0)), 0), prefix_max_(labels_.size(), 0) {
  if (n < 0) throw DomainError("set partitions of a negative-size set");
}

bool SetPartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // Rightmost position that can still grow: labels[i] <= max(labels[0..i-1]).
    std::size_t i = labels_.size();
    while (i > 1 && labels_[i - 1] > prefix_max_[i - 1]) --i;
    if (i <= 1) {
      done_ = true;
      return false;
    }
    --i;
    ++labels_[i];
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      labels_[j] = 0;
      prefix_max_[j] = std::max(prefix_max_[j - 1], labels_[j - 1]);
    }
  }
  current_ = SetPartition::from_labels(labels_);
  return true;
}

// ---------------------------------------------------------------------------
// ComplementEnumerator

ComplementEnumerator::ComplementEnumerator(const SetPartition& rho)
    : rho_(rho),
      n_(rho.ground_size()),
      target_blocks_(rho.ground_size() + 1 - rho.length()),
      choice_(static_cast<std::size_t>(n_), 0),
      used_before_(static_cast<std::size_t>(n_) + 1, 0),
      parent_(static_cast<std::size_t>(rho.length() + target_blocks_)),
      rank_size_(parent_.size(), 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
  history_.reserve(static_cast<std::size_t>(n_));
  if (n_ == 0) done_ = true;
}

int ComplementEnumerator::find(int v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
  return v;
}

// Vertices 0..l(rho)-1 are rho-blocks, the rest are blocks of the complement.
bool ComplementEnumerator::try_assign(int element, int block) {
  const auto e = static_cast<std::size_t>(element);
  const int used = used_before_[e];
  const bool fresh = block == used;
  if (fresh && used >= target_blocks_) return false;
  const int used_after = used + (fresh ? 1 : 0);
  if (used_after + (n_ - element - 1) < target_blocks_) return false;

  int a = find(rho_.block_of(element));
  int b = find(rho_.length() + block);
  if (a == b) return false;  // would close a cycle
  if (rank_size_[static_cast<std::size_t>(a)] > rank_size_[static_cast<std::size_t>(b)]) std::swap(a, b);
  parent_[static_cast<std::size_t>(a)] = b;
  rank_size_[static_cast<std::size_t>(b)] += rank_size_[static_cast<std::size_t>(a)];
  history_.push_back({a, b});
  used_before_[e + 1] = used_after;
  return true;
}

void ComplementEnumerator::undo_last() {
  const Link link = history_.back();
  history_.pop_back();
  parent_[static_cast<std::size_t>(link.child)] = link.child;
  rank_size_[static_cast<std::size_t>(link.parent)] -= rank_size_[static_cast<std::size_t>(link.child)];
}

bool ComplementEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pos_ = 0;
    choice_[0] = 0;
  } else {
    pos_ = n_ - 1;
    undo_last();
    ++choice_[static_cast<std::size_t>(pos_)];
  }
  while (pos_ >= 0) {
    const auto p = static_cast<std::size_t>(pos_);
    bool placed = false;
    while (choice_[p] <= used_before_[p]) {
      if (try_assign(pos_, choice_[p])) {
        placed = true;
        break;
      }
      ++choice_[p];
    }
    if (placed) {
      if (pos_ == n_ - 1) {
        current_ = SetPartition::from_labels(choice_);
        ++emitted_;
        return true;
      }
      ++pos_;
      choice_[static_cast<std::size_t>(pos_)] = 0;
    } else {
      --pos_;
      if (pos_ < 0) break;
      undo_last();
      ++choice_[static_cast<std::size_t>(pos_)];
    }
  }
  done_ = true;
  return false;
}

}  // namespace mv
