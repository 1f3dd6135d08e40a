#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plonka/base.hpp"
#include "plonka/partition.hpp"

namespace plonka {

// The order is always derived from the join table, never stored.
struct JoinSemilattice {
  std::vector<std::vector<int>> join;
  std::optional<int> least;

  int size() const { return static_cast<int>(join.size()); }
  int j(int a, int b) const { return join[a][b]; }
  bool leq(int a, int b) const { return join[a][b] == b; }
  std::vector<Diagnostic> validate() const;
  auto operator<=>(const JoinSemilattice&) const = default;
};

JoinSemilattice make_semilattice(std::vector<std::vector<int>> join,
                                 std::optional<int> least);  // throws ValidationError
JoinSemilattice chain_semilattice(int n);
JoinSemilattice diamond_semilattice();  // 0 < 1,2 < 3

struct IndexRelation {
  int n = 0;
  std::set<std::pair<int, int>> pairs;

  bool has(int i, int j) const { return pairs.count({i, j}) > 0; }
  static IndexRelation diagonal(int n);
  static IndexRelation from_partition(const Partition& p);
  auto operator<=>(const IndexRelation&) const = default;
};

using SemilatticeCongruence = Partition;

bool is_semilattice_congruence(const JoinSemilattice& s, const Partition& p);
// Exact list in restricted-growth-string order, filtered by compatibility.
std::vector<Partition> all_semilattice_congruences(const JoinSemilattice& s, int cap = cap_default(10));
Partition cg_semilattice(const JoinSemilattice& s, const std::vector<std::pair<int, int>>& pairs);
bool is_upper_transitive(const JoinSemilattice& s, const IndexRelation& r);
bool is_join_closed(const JoinSemilattice& s, const IndexRelation& r);
// Least relation containing r that is reflexive, symmetric, closed under
// componentwise join, and upper transitive.
IndexRelation closure_refl_symm_join_ut(const JoinSemilattice& s, const IndexRelation& r);
// C_S = {(i,j) : (i,i∨j) in S and (j,i∨j) in S}, returned as a partition.
// Throws ValidationError if the relation is not an equivalence.
Partition c_of_relation(const JoinSemilattice& s, const IndexRelation& r);

JoinSemilattice quotient_semilattice(const JoinSemilattice& s, const Partition& c);

}  // namespace plonka
