#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plonka/direct_system.hpp"

namespace plonka {

struct AxiomSuite {
  std::string name;
  Signature sig;
  std::vector<std::pair<std::string, Identity>> identities;
  std::optional<Identity> irregular_witness;
};

// IBSL (1)–(8), Clifford CS1–CS5, DualWeakBrace DWB1–DWB11, each with its
// strong-irregularity witness.
std::vector<AxiomSuite> builtin_suites();

struct SuiteReport {
  std::vector<std::pair<std::string, bool>> results;
  bool all_passed = true;
  std::optional<bool> witness_passed;
};

SuiteReport check_suite(const FiniteAlgebra& alg, const AxiomSuite& suite,
                        bool include_witness);

// Common signatures
Signature group_signature();
Signature ibsl_signature();
Signature lattice_signature();
Signature dwb_signature();

// Small building blocks
FiniteAlgebra z_group(int n);
FiniteAlgebra klein_group();
FiniteAlgebra b2();  // 2-element Boolean algebra
FiniteAlgebra b4();  // 4-element Boolean algebra {0, a, a', 1}
FiniteAlgebra dwb_of_group(const FiniteAlgebra& g);  // trivial brace: · = ∘

// Worked systems
DirectSystem diamond_ibsl_system();  // 14 elements over the diamond
DirectSystem nontransitivity_system();  // two trivial bottom lattices + 2-chain top

std::vector<std::pair<std::string, FiniteAlgebra>> catalog_algebras();
std::vector<std::pair<std::string, DirectSystem>> catalog_systems();

}  // namespace plonka
