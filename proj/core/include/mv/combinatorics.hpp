#pragma once

// Partitions, compositions and set partitions, including the complements of a
// set partition used by the Wick-type expansion.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <string>
#include <vector>

namespace mv {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  // Sorts into weakly decreasing order; throws DomainError on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // |lambda| + l(lambda)
  int weight() const { return size() + length(); }
  int multiplicity(int part) const;
  // part -> M_part(lambda), only parts that occur.
  std::map<int, int> multiplicities() const;

  std::string str() const;  // "(3,1,1)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

using Composition = std::vector<int>;

std::vector<Partition> partitions_of_size(int n);
// Partitions of n with exactly k parts.
std::vector<Partition> partitions_of_size(int n, int k);
// All lambda with |lambda| + l(lambda) = w.
std::vector<Partition> partitions_of_weight(int w);
// Ordered k-tuples of positive integers summing to n (empty when k > n).
std::vector<Composition> compositions(int n, int k);
// Ordered k-tuples of nonnegative integers summing to n.
std::vector<Composition> nonneg_compositions(int n, int k);

// Reduced set partition of {0, ..., n-1}. Stored as a restricted growth string:
// label(i) is the block of element i, and blocks are numbered by their minimum
// element, so equality of values is equality of reduced set partitions.
class SetPartition {
 public:
  SetPartition() = default;
  // Any labelling; relabelled into canonical form.
  static SetPartition from_labels(const std::vector<int>& labels);
  // Blocks of 0-based elements; throws DomainError unless they partition {0..n-1}.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);
  static SetPartition discrete(int n);
  static SetPartition single_block(int n);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int length() const { return length_; }
  int block_of(int element) const { return labels_[static_cast<std::size_t>(element)]; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  // 1-based display, e.g. "({1,3},{2})".
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<int> labels_;
  int length_ = 0;
};

// Set partition with a fixed block order (distinct from its reorderings).
struct NonreducedSetPartition {
  std::vector<std::vector<int>> blocks;

  SetPartition reduced() const { return SetPartition::from_blocks(blocks); }
  std::vector<int> block_size_profile() const;
};

// Finest common coarsening of a and b.
SetPartition join(const SetPartition& a, const SetPartition& b);
// Every block of a lies inside a block of b.
bool refines(const SetPartition& a, const SetPartition& b);
// Every block of a meets every block of b in at most one element.
bool is_transverse(const SetPartition& a, const SetPartition& b);
// l(a) + l(b) = n + 1 and join(a, b) is the one-block partition.
bool are_complementary(const SetPartition& a, const SetPartition& b);

// Streams every reduced set partition of {0..n-1} in lexicographic order of
// restricted growth strings.
class SetPartitionEnumerator {
 public:
  explicit SetPartitionEnumerator(int n);
  bool next();
  const SetPartition& current() const { return current_; }

 private:
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
  bool started_ = false;
  bool done_ = false;
  SetPartition current_;
};

// Streams the set partitions complementary to rho by backtracking over block
// assignments. Element e joins an existing block only if that block is not yet
// connected to e's rho-block; with exactly N + 1 - l(rho) blocks this keeps the
// bipartite block graph a forest and ends on a spanning tree, which implies
// transversality and a one-block join.
class ComplementEnumerator {
 public:
  explicit ComplementEnumerator(const SetPartition& rho);
  bool next();
  const SetPartition& current() const { return current_; }
  // Number of complements emitted so far.
  std::size_t count() const { return emitted_; }

 private:
  struct Link {
    int child;
    int parent;
  };
  int find(int v) const;
  bool try_assign(int element, int block);
  void undo_last();

  SetPartition rho_;
  int n_ = 0;
  int target_blocks_ = 0;
  std::vector<int> choice_;
  std::vector<int> used_before_;
  std::vector<int> parent_;
  std::vector<int> rank_size_;
  std::vector<Link> history_;
  int pos_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::size_t emitted_ = 0;
  SetPartition current_;
};

// Input range over any enumerator with next()/current().
template <class Enumerator>
class EnumeratorRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPartition*;
    using reference = const SetPartition&;

    iterator() = default;
    explicit iterator(Enumerator* e) : e_(e) { advance(); }
    reference operator*() const { return e_->current(); }
    pointer operator->() const { return &e_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) { return a.e_ == b.e_; }

   private:
    void advance() {
      if (e_ && !e_->next()) e_ = nullptr;
    }
    Enumerator* e_ = nullptr;
  };

  explicit EnumeratorRange(Enumerator e) : enumerator_(std::move(e)) {}
  iterator begin() { return iterator(&enumerator_); }
  iterator end() { return iterator(); }

 private:
  Enumerator enumerator_;
};

inline EnumeratorRange<SetPartitionEnumerator> set_partitions(int n) {
  return EnumeratorRange<SetPartitionEnumerator>(SetPartitionEnumerator(n));
}

inline EnumeratorRange<ComplementEnumerator> complementary_partitions(const SetPartition& rho) {
  return EnumeratorRange<ComplementEnumerator>(ComplementEnumerator(rho));
}

}  // namespace mv
