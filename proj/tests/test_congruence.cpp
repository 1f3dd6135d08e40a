#include <random>

#include "doctest.h"
#include "plonka/congruence.hpp"
#include "plonka/varieties.hpp"

using namespace plonka;

namespace {

// the two system congruences of the diamond IBSL worked example; global
// element order is 0a,a,a',1a,bot,top,0b,b,b',1b,0c,c,c',1c
struct DiamondExample {
  PlonkaSum ps;
  SystemCongruence sc1, sc2;
  Partition th1, th2;

  DiamondExample() : ps(compose(diamond_ibsl_system())) {
    // C1 glues 0 with j and i with the top; fiberwise it collapses each
    // 4-element Boolean fiber along the a-ultrafilter kernel
    sc1.index_con = Partition::from_block_of({0, 1, 0, 1});
    sc1.fiber_cons = {Partition::from_blocks(4, {{0, 1}, {2, 3}}), Partition::full(2),
                      Partition::from_blocks(4, {{0, 1}, {2, 3}}), Partition::full(4)};
    sc2.index_con = Partition::from_block_of({0, 0, 1, 1});
    sc2.fiber_cons = {Partition::from_blocks(4, {{0, 2}, {1, 3}}), Partition::discrete(2),
                      Partition::from_blocks(4, {{0, 2}, {1, 3}}), Partition::discrete(4)};
    th1 = Partition::from_blocks(
        14, {{0, 1, 6, 7}, {2, 3, 8, 9}, {4, 5, 10, 11, 12, 13}});
    th2 = Partition::from_blocks(
        14, {{0, 2, 4}, {1, 3, 5}, {6, 8, 10}, {7, 9, 13}, {11}, {12}});
  }
};

}  // namespace

TEST_CASE("cg on z4 collapses along the subgroup") {
  Partition th = cg(z_group(4), {{0, 2}});
  CHECK(th == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(is_congruence(z_group(4), th));
  CHECK(cg(z_group(4), {{0, 1}}).is_full());
  CHECK(cg(z_group(4), {}).is_discrete());
}

TEST_CASE("congruence lattices of small algebras") {
  CHECK(all_congruences(z_group(4)).size() == 3);    // one per subgroup
  CHECK(all_congruences(klein_group()).size() == 5); // three proper subgroups
  CHECK(all_congruences(b4()).size() == 4);          // two ultrafilter kernels
  CHECK(all_congruences(z_group(3)).size() == 2);    // simple
  for (const auto& c : all_congruences(b4())) CHECK(is_congruence(b4(), c));
  CHECK_THROWS_AS(all_congruences(compose(diamond_ibsl_system()).algebra),
                  SizeCapError);
}

TEST_CASE("fiber data of a congruence on the star sum") {
  PlonkaSum ps = compose(star(b2()));
  Partition th = Partition::from_blocks(3, {{0, 1}, {2}});
  REQUIRE(is_congruence(ps.algebra, th));
  FiberData fd = fibers_of(ps, th);
  CHECK(fd.S.has(0, 0));
  CHECK(fd.S.has(1, 1));
  CHECK_FALSE(fd.S.has(0, 1));
  CHECK(fd.C.is_discrete());
  SystemCongruence sc = to_system_congruence(ps, th);
  CHECK(sc.index_con.is_discrete());
  CHECK(sc.fiber_cons[0].is_full());
  CHECK(sc.fiber_cons[1].is_full());
  CHECK(from_system_congruence(ps, sc) == th);
}

TEST_CASE("system congruence conditions reject bad data") {
  PlonkaSum ps = compose(star(b2()));
  SUBCASE("condition (iii): fiber blocks must survive the transition") {
    // klein over z2: the full congruence below cannot survive an injective-
    // on-blocks transition into a discrete congruence above
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = {0, 0, 1, 1};
    DirectSystem d = make_system(chain_semilattice(2), {klein_group(), z_group(2)}, trans);
    SystemCongruence sc;
    sc.index_con = Partition::full(2);
    sc.fiber_cons = {Partition::full(4), Partition::discrete(2)};
    auto ds = validate_system_congruence(d, sc);
    REQUIRE_FALSE(ds.empty());
    CHECK(ds[0].code == "ConditionIII");
  }
  SUBCASE("condition (iv): equality on S_C") {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = {0, 0};  // collapsing transition
    DirectSystem d = make_system(chain_semilattice(2), {z_group(2), z_group(2)}, trans);
    SystemCongruence sc;
    sc.index_con = Partition::full(2);
    // S_C contains (0,0) through the collapsed image, so θ_00 must pull the
    // full top congruence back; the discrete θ_00 violates (iv)
    sc.fiber_cons = {Partition::discrete(2), Partition::full(2)};
    auto ds = validate_system_congruence(d, sc);
    REQUIRE_FALSE(ds.empty());
    CHECK(ds[0].code == "ConditionIV");
  }
  SUBCASE("valid data round-trips") {
    SystemCongruence sc;
    sc.index_con = Partition::full(2);
    sc.fiber_cons = {Partition::full(2), Partition::full(1)};
    CHECK(validate_system_congruence(ps.origin, sc).empty());
    CHECK(from_system_congruence(ps, sc).is_full());
  }
}

TEST_CASE("diamond IBSL worked example") {
  DiamondExample ex;
  REQUIRE(is_congruence(ex.ps.algebra, ex.th1));
  REQUIRE(is_congruence(ex.ps.algebra, ex.th2));

  SUBCASE("system data composes to the listed classes") {
    CHECK(validate_system_congruence(ex.ps.origin, ex.sc1).empty());
    CHECK(validate_system_congruence(ex.ps.origin, ex.sc2).empty());
    CHECK(from_system_congruence(ex.ps, ex.sc1) == ex.th1);
    CHECK(from_system_congruence(ex.ps, ex.sc2) == ex.th2);
    CHECK(to_system_congruence(ex.ps, ex.th1) == ex.sc1);
    CHECK(to_system_congruence(ex.ps, ex.th2) == ex.sc2);
  }
  SUBCASE("the pair is not permutable: (c,b) separates the composites") {
    CHECK_FALSE(permutable(ex.th1, ex.th2));
    // c θ1 1c θ2 b but no z with c θ2 z θ1 b
    const int c = 11, b = 7, top_c = 13;
    CHECK(ex.th1.same(c, top_c));
    CHECK(ex.th2.same(top_c, b));
    for (int z = 0; z < 14; ++z) CHECK_FALSE((ex.th2.same(c, z) && ex.th1.same(z, b)));
  }
  SUBCASE("meet and join behave like a direct decomposition attempt") {
    CHECK(ex.th1.meet(ex.th2).is_discrete());
    CHECK(ex.th1.join(ex.th2).is_full());
    // ... yet not a factor pair, for lack of permutability
    CHECK_FALSE(is_factor_pair(ex.ps.algebra, ex.th1, ex.th2));
    CHECK(check_factor_theorem(ex.ps, ex.th1, ex.th2));
  }
}

TEST_CASE("generated system congruence needs S_R inside C") {
  PlonkaSum ps = compose(star(b2()));
  CHECK_THROWS_WITH_AS(generated_system_congruence(ps, {{0, 2}}, Partition::discrete(2)),
                       doctest::Contains("PrematureRelation"), ValidationError);
  // with C large enough it goes through
  SystemCongruence sc = generated_system_congruence(ps, {{0, 2}}, Partition::full(2));
  CHECK(validate_system_congruence(ps.origin, sc).empty());
  CHECK(from_system_congruence(ps, sc) == cg(ps.algebra, {{0, 2}}));
}

TEST_CASE("cg via the system route equals the direct Mal'cev closure") {
  std::mt19937 rng(7141312);
  for (const auto& [name, d] : catalog_systems()) {
    PlonkaSum ps = compose(d);
    if (ps.algebra.size() > 10) continue;
    INFO("system ", name);
    std::uniform_int_distribution<int> el(0, ps.algebra.size() - 1);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<std::pair<int, int>> R;
      int k = 1 + trial % 3;
      for (int i = 0; i < k; ++i) R.emplace_back(el(rng), el(rng));
      CHECK(cg_plonka(ps, R) == cg(ps.algebra, R));
    }
  }
}

TEST_CASE("quotient sum composes to the quotient algebra") {
  PlonkaSum ps = compose(star(b2()));
  Partition th = Partition::from_blocks(3, {{0, 1}, {2}});
  DirectSystem q = quotient_plonka(ps, th);
  CHECK(q.index.size() == 2);
  CHECK(compose(q).algebra.size() == 2);
  // full collapse leaves the one-point system
  DirectSystem q1 = quotient_plonka(ps, Partition::full(3));
  CHECK(q1.index.size() == 1);
  CHECK(q1.fibers[0].size() == 1);
  CHECK_THROWS_AS(quotient_plonka(ps, Partition::from_blocks(3, {{1, 2}, {0}})),
                  ValidationError);
}

TEST_CASE("quotient of the diamond sum by θ1") {
  DiamondExample ex;
  DirectSystem q = quotient_plonka(ex.ps, ex.th1);
  CHECK(q.index.size() == 2);   // C1 has two blocks
  CHECK(compose(q).algebra.size() == 3);
  FiniteAlgebra qa = quotient_algebra(ex.ps.algebra, ex.th1);
  CHECK(qa.size() == 3);
  CHECK(qa.labels == std::vector<std::string>{"[0a]", "[a']", "[bot]"});
}

TEST_CASE("monolith and subdirect irreducibility") {
  auto m = monolith(z_group(4));
  REQUIRE(m.has_value());
  CHECK(*m == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(subdirectly_irreducible(z_group(4)));
  CHECK(subdirectly_irreducible(z_group(3)));
  CHECK(subdirectly_irreducible(b2()));
  CHECK_FALSE(subdirectly_irreducible(klein_group()));
  CHECK_FALSE(subdirectly_irreducible(b4()));
  CHECK_FALSE(monolith(trivial_algebra(group_signature())).has_value());
}

TEST_CASE("absorbing elements") {
  FiniteAlgebra i3 = compose(star(b2())).algebra;
  auto a = has_absorbing_element(i3);
  REQUIRE(a.has_value());
  CHECK(i3.labels[*a] == "inf");
  CHECK_FALSE(has_absorbing_element(z_group(2)).has_value());
  CHECK_FALSE(has_absorbing_element(b2()).has_value());  // 0 absorbs ∧ but not ∨
  CHECK_THROWS_WITH_AS(has_absorbing_element(trivial_algebra(group_signature())),
                       doctest::Contains("TrivialAlgebra"), ValidationError);
}

TEST_CASE("SI dichotomy readings") {
  // SI base, no absorbing element: the star is SI again
  SiReadings r = si_readings(b2());
  CHECK(r.star_si);
  CHECK(r.rhs_strict);
  CHECK(r.rhs_trivial_ok);
  // absorbing element kills it even for an SI base
  r = si_readings(compose(star(b2())).algebra);
  CHECK_FALSE(r.star_si);
  CHECK_FALSE(r.rhs_strict);
  CHECK_FALSE(r.rhs_trivial_ok);
  // the trivial base separates the two readings
  r = si_readings(trivial_algebra(group_signature()));
  CHECK(r.star_si);
  CHECK_FALSE(r.rhs_strict);
  CHECK(r.rhs_trivial_ok);
  // not SI base
  r = si_readings(klein_group());
  CHECK_FALSE(r.star_si);
  CHECK_FALSE(r.rhs_trivial_ok);
  for (const FiniteAlgebra& a :
       {b2(), z_group(2), z_group(3), z_group(4), klein_group(), b4(),
        trivial_algebra(group_signature())})
    CHECK(check_si_theorem(a));
}
