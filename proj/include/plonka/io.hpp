#pragma once

#include <string>

#include "json.hpp"
#include "plonka/congruence.hpp"
#include "plonka/plonka_sum.hpp"

namespace plonka {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const Json& j);  // throws ParseError / ValidationError

Json semilattice_to_json(const JoinSemilattice& s);
JoinSemilattice semilattice_from_json(const Json& j);

Json system_to_json(const DirectSystem& d);
DirectSystem system_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, int expected_size);

// Parenthesized prefix form: variables are bare tokens, applications are
// (op arg...), constants are written (one).
Term parse_term(const std::string& text);
std::string term_to_string(const Term& t);

// Identity text: "<term> = <term>" (also accepts the ≈ sign).
Identity parse_identity(const std::string& text);

// Hasse diagram of the order derived from the join table.
std::string semilattice_dot(const JoinSemilattice& s,
                            const std::vector<std::string>& labels = {});
// Hasse diagram of a congruence set under refinement.
std::string congruence_lattice_dot(const std::vector<Partition>& cons);

}  // namespace plonka
