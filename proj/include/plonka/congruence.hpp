#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "plonka/plonka_sum.hpp"

namespace plonka {

using AlgebraCongruence = Partition;

bool is_congruence(const FiniteAlgebra& alg, const Partition& p);
// Least congruence containing the pairs: alternates one-step operation
// substitution with transitive closure until fixpoint (Mal'cev style).
Partition cg(const FiniteAlgebra& alg, const std::vector<std::pair<int, int>>& pairs);
// Join-closure of the principal congruences plus Δ; exact and canonical.
std::vector<Partition> all_congruences(const FiniteAlgebra& alg, int cap = cap_default(12));

struct FiberData {
  IndexRelation S;  // {(i,j) : θ ∩ (A_i×A_j) ≠ ∅}
  Partition C;      // {(i,j) : (i,i∨j) ∈ S ∧ (j,i∨j) ∈ S}
  std::map<std::pair<int, int>, std::set<std::pair<int, int>>> theta_blocks;  // local pairs
};

FiberData fibers_of(const PlonkaSum& ps, const Partition& th);

struct SystemCongruence {
  Partition index_con;                // C, on the index semilattice
  std::vector<Partition> fiber_cons;  // θ_ii, one per fiber

  auto operator<=>(const SystemCongruence&) const = default;
};

// S_C = {(i,j) ∈ C : (p_{i,i∨j} × p_{j,i∨j})⁻¹(θ_{i∨j,i∨j}) ≠ ∅}.
IndexRelation s_of(const DirectSystem& d, const SystemCongruence& sc);
// Conditions (i)–(iv) of the system-congruence definition.
std::vector<Diagnostic> validate_system_congruence(const DirectSystem& d,
                                                   const SystemCongruence& sc);

SystemCongruence to_system_congruence(const PlonkaSum& ps, const Partition& th);
// Throws ValidationError("InvalidSystemCongruence...") when (i)–(iv) fail.
Partition from_system_congruence(const PlonkaSum& ps, const SystemCongruence& sc);

// Brute-force oracle: every (C, {θ_ii}) passing the validity conditions.
std::vector<SystemCongruence> all_system_congruences(const DirectSystem& d,
                                                     int cap = cap_default(10));

// Ψ_i = Cg^{A_i}(∪_{u,v≤i} (p_ui×p_vi)(R_uv)); θ_ii via the S_C clause.
// Throws ValidationError("PrematureRelation...") when S_R ⊄ C.
SystemCongruence generated_system_congruence(const PlonkaSum& ps,
                                             const std::vector<std::pair<int, int>>& R,
                                             const Partition& C);
// from_system_congruence ∘ generated_system_congruence over Cg^I(S_R);
// provably equal to cg on the composed algebra.
Partition cg_plonka(const PlonkaSum& ps, const std::vector<std::pair<int, int>>& R);

bool permutable(const Partition& th1, const Partition& th2);
bool is_factor_pair(const FiniteAlgebra& alg, const Partition& th1, const Partition& th2);
// Factor pair of plain equivalences (used for the index semilattice side).
bool is_factor_pair_partitions(const Partition& th1, const Partition& th2);
bool check_factor_theorem(const PlonkaSum& ps, const Partition& th1, const Partition& th2);

FiniteAlgebra quotient_algebra(const FiniteAlgebra& alg, const Partition& th);
DirectSystem quotient_plonka(const PlonkaSum& ps, const Partition& th);

std::optional<Partition> monolith(const FiniteAlgebra& alg, int cap = cap_default(12));
bool subdirectly_irreducible(const FiniteAlgebra& alg, int cap = cap_default(12));
// Throws ValidationError("TrivialAlgebra") on a 1-element carrier.
std::optional<int> has_absorbing_element(const FiniteAlgebra& alg);

struct SiReadings {
  bool star_si;          // SI(compose(star(b)))
  bool rhs_strict;       // SI(b) ∧ no absorbing element
  bool rhs_trivial_ok;   // (SI(b) ∨ b trivial) ∧ no absorbing element
};
SiReadings si_readings(const FiniteAlgebra& b, int cap = cap_default(12));
// The reading admitting the trivial base algebra is the one matching brute
// force (star of a trivial algebra is the simple 2-element semilattice).
bool check_si_theorem(const FiniteAlgebra& b, int cap = cap_default(12));

}  // namespace plonka
