#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "plonka/plonka_sum.hpp"

namespace plonka {

// Callback contract for a locally finite fiber variety: make(k) builds the
// free algebra on k generators with its generator elements; extend(k, target,
// images) returns the unique homomorphism B_k -> target sending generator r to
// images[r], for any target in the variety.
struct FreeFiberProvider {
  std::string variety;
  int max_generators = 0;
  std::function<std::pair<FiniteAlgebra, std::vector<int>>(int)> make;
  std::function<std::vector<int>(int, const FiniteAlgebra&, const std::vector<int>&)> extend;
};

// Subsets of {0..n-1} under union; element index is the bitmask, least = 0.
JoinSemilattice finite_subsets_semilattice(int n);

struct FreeReport {
  DirectSystem system;
  std::map<std::string, int> generator_locations;  // name -> global element
  long long predicted_size = 0;
  int actual_size = 0;
};

FreeReport free_plonka(int n, const FreeFiberProvider& provider);

// Conditions of the freeness characterization; claimed_gens maps each
// singleton index (bitmask with one bit) to a local generator in its fiber.
std::vector<Diagnostic> check_freeness_conditions(const DirectSystem& d,
                                                  const std::map<int, int>& claimed_gens);

long long free_count(int n, const std::vector<long long>& sizes);

FreeFiberProvider boolean_free_provider();

}  // namespace plonka
