#include "plonka/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace plonka {

UnionFind::UnionFind(int n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

void Partition::canonicalize() {
  // Incoming ids are arbitrary ints (meet() produces products of ids).
  std::map<int, int> remap;
  int next = 0;
  for (int& id : block_) {
    auto [it, fresh] = remap.try_emplace(id, next);
    if (fresh) ++next;
    id = it->second;
  }
  count_ = next;
}

Partition Partition::discrete(int n) {
  Partition p;
  p.block_.resize(n);
  std::iota(p.block_.begin(), p.block_.end(), 0);
  p.count_ = n;
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.block_.assign(n, 0);
  p.count_ = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_block_of(std::vector<int> ids) {
  Partition p;
  p.block_ = std::move(ids);
  p.canonicalize();
  return p;
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = uf.find(i);
  return from_block_of(std::move(ids));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n, -1);
  int next = 0;
  for (const auto& b : blocks) {
    for (int e : b) ids[e] = next;
    ++next;
  }
  for (int i = 0; i < n; ++i)
    if (ids[i] < 0) ids[i] = next++;
  return from_block_of(std::move(ids));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(count_);
  for (int i = 0; i < size(); ++i) out[block_[i]].push_back(i);
  return out;
}

std::vector<std::pair<int, int>> Partition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (block_[a] == block_[b]) out.emplace_back(a, b);
  return out;
}

bool Partition::refines(const Partition& o) const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (same(a, b) && !o.same(a, b)) return false;
  return true;
}

Partition Partition::meet(const Partition& o) const {
  std::vector<int> ids(size());
  for (int i = 0; i < size(); ++i) ids[i] = block_[i] * o.size() + o.block_[i];
  return from_block_of(std::move(ids));
}

Partition Partition::join(const Partition& o) const {
  UnionFind uf(size());
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (same(a, b) || o.same(a, b)) uf.unite(a, b);
  std::vector<int> ids(size());
  for (int i = 0; i < size(); ++i) ids[i] = uf.find(i);
  return from_block_of(std::move(ids));
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition::discrete(0));
    return out;
  }
  // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  while (true) {
    out.push_back(Partition::from_block_of(a));
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int k = 0; k < i; ++k) mx = std::max(mx, a[k]);
      if (a[i] <= mx) break;
      a[i] = 0;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

}  // namespace plonka
