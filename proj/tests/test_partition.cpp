#include "doctest.h"
#include "plonka/partition.hpp"

using namespace plonka;

TEST_CASE("all_partitions counts are the Bell numbers") {
  // B_0..B_6 = 1, 1, 2, 5, 15, 52, 203
  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) CHECK(all_partitions(n).size() == (size_t)bell[n]);
}

TEST_CASE("canonical ids and basic constructors") {
  Partition p = Partition::from_block_of({7, 7, 3, 7, 3});
  CHECK(p.ids() == std::vector<int>{0, 0, 1, 0, 1});
  CHECK(p.num_blocks() == 2);
  CHECK(p == Partition::from_blocks(5, {{0, 1, 3}, {2, 4}}));
  CHECK(p == Partition::from_pairs(5, {{0, 1}, {1, 3}, {2, 4}}));
  CHECK(Partition::discrete(4).is_discrete());
  CHECK(Partition::full(4).is_full());
  // from_blocks leaves unmentioned elements as singletons
  Partition q = Partition::from_blocks(4, {{1, 2}});
  CHECK(q.blocks() == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
}

TEST_CASE("pairs lists exactly the related pairs a<b") {
  Partition p = Partition::from_blocks(4, {{0, 2, 3}, {1}});
  CHECK(p.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {2, 3}});
}

TEST_CASE("refinement order with meet and join is a lattice") {
  auto all = all_partitions(4);
  for (const auto& p : all) {
    CHECK(p.refines(p));
    CHECK(Partition::discrete(4).refines(p));
    CHECK(p.refines(Partition::full(4)));
    for (const auto& q : all) {
      Partition m = p.meet(q), j = p.join(q);
      CHECK(m.refines(p));
      CHECK(m.refines(q));
      CHECK(p.refines(j));
      CHECK(q.refines(j));
      // glb / lub against every other partition
      for (const auto& r : all) {
        if (r.refines(p) && r.refines(q)) CHECK(r.refines(m));
        if (p.refines(r) && q.refines(r)) CHECK(j.refines(r));
      }
      CHECK((p.refines(q) == (p.meet(q) == p)));
    }
  }
}

TEST_CASE("meet survives large intermediate ids") {
  // regression: meet builds ids as products; canonicalize must accept them
  Partition a = Partition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}});
  Partition b = Partition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(a.meet(b).is_discrete());
  CHECK(a.join(b).is_full());
}

TEST_CASE("union-find basics") {
  UnionFind uf(4);
  CHECK(uf.unite(0, 1));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.find(1) == uf.find(0));
  CHECK(uf.find(2) != uf.find(0));
}
