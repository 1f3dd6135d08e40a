#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plonka/base.hpp"

namespace plonka {

constexpr int kMaxArity = 4;

struct OpSym {
  std::string name;
  int arity = 0;
  auto operator<=>(const OpSym&) const = default;
};

struct Signature {
  std::vector<OpSym> operations;

  int find(const std::string& name) const;  // -1 if absent
  bool plural() const;                      // some arity >= 2
  bool has_constants() const;
  std::vector<Diagnostic> validate() const;
  auto operator<=>(const Signature&) const = default;
};

// Operation tables are flat row-major: index of (a_1,...,a_k) is
// ((a_1*n + a_2)*n + ...)*n + a_k. A constant's table is a single entry.
struct FiniteAlgebra {
  Signature sig;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> tables;  // one per operation

  int size() const { return static_cast<int>(labels.size()); }
  int apply(int op, const std::vector<int>& args) const;
  int constant(int op) const { return tables[op][0]; }
  std::vector<Diagnostic> validate() const;
  bool operator==(const FiniteAlgebra&) const = default;
};

// Validates; throws ValidationError on any diagnostic.
FiniteAlgebra make_algebra(Signature sig, std::vector<std::string> labels,
                           std::vector<std::vector<int>> tables);

// Iterate all k-tuples over 0..n-1. Returns false when exhausted.
bool next_tuple(std::vector<int>& t, int n);

struct Term {
  bool is_var = false;
  std::string head;        // variable name or operation name
  std::vector<Term> args;  // empty for variables and constants

  static Term var(std::string name) { return Term{true, std::move(name), {}}; }
  static Term app(std::string op, std::vector<Term> as = {}) {
    return Term{false, std::move(op), std::move(as)};
  }
  bool operator==(const Term&) const = default;
};

struct Identity {
  Term lhs, rhs;
};

using Assignment = std::map<std::string, int>;

std::set<std::string> term_vars(const Term& t);
// Throws ValidationError (UnknownOperation / ArityMismatch / UnboundVariable).
int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& v);
bool satisfies_identity(const FiniteAlgebra& alg, const Identity& id);
bool is_regular(const Identity& id);

struct Homomorphism {
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<int> map;
};

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                     const std::vector<int>& map);
bool check_homomorphism(const Homomorphism& h);

std::vector<int> generated_subalgebra(const FiniteAlgebra& alg,
                                      const std::vector<int>& seed);

FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& algs);

// Images of the generators determine at most one homomorphism when the source
// is generated by `gens`. Returns the full map if one exists, nullopt if the
// assignment is inconsistent or fails preservation.
std::optional<std::vector<int>> extend_by_generation(const FiniteAlgebra& src,
                                                     const std::vector<int>& gens,
                                                     const FiniteAlgebra& dst,
                                                     const std::vector<int>& images);

// All homomorphisms src -> dst, by extending generator images of a generating
// set of src. Canonically ordered.
std::vector<std::vector<int>> all_homomorphisms(const FiniteAlgebra& src,
                                                const FiniteAlgebra& dst);

}  // namespace plonka
