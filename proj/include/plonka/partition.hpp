#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace plonka {

// Plain union-find over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int a);
  // Returns true if the two classes were distinct.
  bool unite(int a, int b);

 private:
  std::vector<int> parent_;
};

// A set partition of {0..n-1}. Canonical form: blocks are numbered by the
// first occurrence of any of their elements, so two partitions are equal as
// equivalence relations iff their id vectors are equal.
class Partition {
 public:
  Partition() = default;
  static Partition discrete(int n);
  static Partition full(int n);
  static Partition from_block_of(std::vector<int> ids);
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_.size()); }
  int num_blocks() const { return count_; }
  int block_id(int e) const { return block_[e]; }
  bool same(int a, int b) const { return block_[a] == block_[b]; }
  bool is_discrete() const { return count_ == size(); }
  bool is_full() const { return count_ <= 1; }

  std::vector<std::vector<int>> blocks() const;
  std::vector<std::pair<int, int>> pairs() const;  // all related pairs a<b

  // this <= o in the refinement order (every block of this inside one of o).
  bool refines(const Partition& o) const;
  Partition meet(const Partition& o) const;
  // Transitive closure of the union; for congruences this is the lattice join.
  Partition join(const Partition& o) const;

  const std::vector<int>& ids() const { return block_; }
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> block_;
  int count_ = 0;
  void canonicalize();
};

// All partitions of an n-set, generated in restricted-growth-string order.
std::vector<Partition> all_partitions(int n);

}  // namespace plonka
