#pragma once

#include <map>
#include <utility>
#include <vector>

#include "plonka/algebra.hpp"
#include "plonka/semilattice.hpp"

namespace plonka {

// Transition maps are stored only for comparable pairs i < j; the diagonal is
// implicitly the identity. Asking for an incomparable pair is a contract
// violation and throws.
struct DirectSystem {
  JoinSemilattice index;
  std::vector<FiniteAlgebra> fibers;
  std::map<std::pair<int, int>, std::vector<int>> transitions;

  std::vector<int> trans(int i, int j) const;
  bool operator==(const DirectSystem&) const = default;
};

std::vector<Diagnostic> validate_system(const DirectSystem& d);
DirectSystem make_system(JoinSemilattice index, std::vector<FiniteAlgebra> fibers,
                         std::map<std::pair<int, int>, std::vector<int>> transitions);

struct SystemMorphism {
  DirectSystem source;
  DirectSystem target;
  std::vector<int> phi;                     // index map
  std::vector<std::vector<int>> components; // per-index fiber maps
};

std::vector<Diagnostic> validate_morphism(const SystemMorphism& m);
SystemMorphism compose_morphisms(const SystemMorphism& g, const SystemMorphism& f);

// A over a fresh one-element top fiber: the 2-chain i < j with b at the
// bottom, {∞} at the top, and the constant transition.
DirectSystem star(const FiniteAlgebra& b);

// Lemma-style extension: h_g(a) = g(p_{ji}(a)) for a in a fiber j <= i, and ∞
// otherwise; a homomorphism from the composed sum of d into the composed star
// of b.
Homomorphism extend_hom(const DirectSystem& d, int i, const Homomorphism& g);

FiniteAlgebra trivial_algebra(const Signature& sig, const std::string& label = "*");

}  // namespace plonka
