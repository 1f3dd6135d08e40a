#include "doctest.h"
#include "plonka/io.hpp"
#include "plonka/varieties.hpp"

using namespace plonka;

TEST_CASE("algebra JSON round-trips bit for bit") {
  for (const auto& [name, a] : catalog_algebras()) {
    INFO("algebra ", name);
    Json j = algebra_to_json(a);
    FiniteAlgebra back = algebra_from_json(j);
    CHECK(algebra_to_json(back).dump() == j.dump());
    CHECK(back.tables == a.tables);
    CHECK(back.labels == a.labels);
  }
}

TEST_CASE("system and semilattice JSON round-trips") {
  for (const auto& [name, d] : catalog_systems()) {
    INFO("system ", name);
    Json j = system_to_json(d);
    DirectSystem back = system_from_json(j);
    CHECK(back == d);
    CHECK(system_to_json(back).dump() == j.dump());
  }
  JoinSemilattice s = diamond_semilattice();
  CHECK(semilattice_from_json(semilattice_to_json(s)) == s);
  // absent least survives as null
  JoinSemilattice nl = make_semilattice({{0, 2, 2}, {2, 1, 2}, {2, 2, 2}}, std::nullopt);
  Json jn = semilattice_to_json(nl);
  CHECK(jn.at("least").is_null());
  CHECK_FALSE(semilattice_from_json(jn).least.has_value());
}

TEST_CASE("partition JSON validates coverage") {
  Partition p = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(partition_from_json(partition_to_json(p), 4) == p);
  CHECK_THROWS_AS(partition_from_json(Json{{"blocks", Json::array({Json::array({0, 1})})}}, 4),
                  ParseError);
  CHECK_THROWS_AS(partition_from_json(Json{{"blocks", Json::array({Json::array({0, 9})})}}, 4),
                  ParseError);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(algebra_from_json(Json{{"elements", Json::array()}}), ParseError);
  CHECK_THROWS_AS(semilattice_from_json(Json{{"size", 2}}), ParseError);
  CHECK_THROWS_AS(system_from_json(Json{{"fibers", Json::array()}}), ParseError);
  // nesting depth disagrees with the arity
  Json j = algebra_to_json(z_group(2));
  j["tables"]["inv"] = 0;
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);
  // structurally fine but semantically invalid -> ValidationError
  j = algebra_to_json(z_group(2));
  j["tables"]["inv"] = Json::array({1});  // wrong table length
  CHECK_THROWS_AS(algebra_from_json(j), ValidationError);
}

TEST_CASE("term parsing round-trips and reports errors") {
  for (const std::string text :
       {"x", "(one)", "(mul x (inv y))", "(or (and x y) (not z))"}) {
    Term t = parse_term(text);
    CHECK(term_to_string(t) == text);
  }
  CHECK(parse_term("  ( mul   x  y )") == parse_term("(mul x y)"));
  CHECK_THROWS_AS(parse_term("(mul x"), ParseError);
  CHECK_THROWS_AS(parse_term("mul x)"), ParseError);
  CHECK_THROWS_AS(parse_term("(mul x y) z"), ParseError);
  CHECK_THROWS_AS(parse_term("()"), ParseError);
}

TEST_CASE("identity parsing accepts both equality signs") {
  Identity a = parse_identity("(mul x y) = (mul y x)");
  Identity b = parse_identity("(mul x y) ≈ (mul y x)");
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK_THROWS_AS(parse_identity("(mul x y)"), ParseError);
}

TEST_CASE("DOT output is byte stable") {
  CHECK(semilattice_dot(chain_semilattice(2)) ==
        "digraph hasse {\n  rankdir=BT;\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n"
        "  n0 -> n1;\n}\n");
  // the diamond has exactly the four cover edges
  std::string d = semilattice_dot(diamond_semilattice());
  CHECK(d.find("n0 -> n1;") != std::string::npos);
  CHECK(d.find("n0 -> n2;") != std::string::npos);
  CHECK(d.find("n1 -> n3;") != std::string::npos);
  CHECK(d.find("n2 -> n3;") != std::string::npos);
  CHECK(d.find("n0 -> n3;") == std::string::npos);  // not a cover
  std::string con = congruence_lattice_dot(all_semilattice_congruences(chain_semilattice(2)));
  CHECK(con == "digraph con {\n  rankdir=BT;\n  n0 [label=\"1 blocks\"];\n"
               "  n1 [label=\"2 blocks\"];\n  n1 -> n0;\n}\n");
}
