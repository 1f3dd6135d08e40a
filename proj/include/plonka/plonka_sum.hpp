#pragma once

#include <utility>
#include <vector>

#include "plonka/direct_system.hpp"

namespace plonka {

struct PlonkaSum {
  FiniteAlgebra algebra;
  DirectSystem origin;
  std::vector<std::pair<int, int>> locate;  // global -> (fiber, local)
  std::vector<std::vector<int>> place;      // fiber -> local -> global

  int global(int fiber, int local) const { return place[fiber][local]; }
};

// Composes a validated system into its sum; globals are ordered fiber-major.
// Throws ValidationError if the system is invalid.
PlonkaSum compose(const DirectSystem& d);

struct PartitionFunction {
  FiniteAlgebra algebra;
  std::vector<std::vector<int>> table;  // the binary ⊙
};

// Empty iff PF1–PF6 hold for every tuple (PF6 only when constants exist);
// diagnostics name the axiom and a witness.
std::vector<Diagnostic> check_partition_function(const PartitionFunction& pf);

// ⊙(a,b) = p_{i,i∨j}(a) for a in fiber i, b in fiber j.
PartitionFunction induced_partition_function(const PlonkaSum& ps);

// Płonka decomposition: fibers from a⊙b=a ∧ b⊙a=b, order from the witness
// condition, transitions x ↦ x⊙b with the b-independence verified.
PlonkaSum decompose(const FiniteAlgebra& alg, const PartitionFunction& pf);

// Conditions of the semilattice-of-subalgebras definition: block i of
// `blocks` corresponds to element i of `order`.
bool check_semilattice_of_subalgebras(const FiniteAlgebra& alg, const Partition& blocks,
                                      const JoinSemilattice& order, int least_block);

}  // namespace plonka
