#include "plonka/plonka_sum.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace plonka {

namespace {

std::string el(const FiniteAlgebra& a, int e) { return a.labels[e]; }

}  // namespace

PlonkaSum compose(const DirectSystem& d) {
  auto ds = validate_system(d);
  if (!ds.empty()) throw ValidationError("InvalidSystem:\n" + diag_text(ds));
  PlonkaSum ps;
  ps.origin = d;
  const int nf = d.index.size();
  int total = 0;
  ps.place.resize(nf);
  for (int f = 0; f < nf; ++f) {
    for (int a = 0; a < d.fibers[f].size(); ++a) {
      ps.place[f].push_back(total++);
      ps.locate.emplace_back(f, a);
    }
  }
  // labels: keep fiber labels when globally distinct, else prefix by fiber
  std::vector<std::string> labels;
  {
    std::set<std::string> seen;
    bool clash = false;
    for (int f = 0; f < nf && !clash; ++f)
      for (const auto& l : d.fibers[f].labels)
        if (!seen.insert(l).second) {
          clash = true;
          break;
        }
    for (int f = 0; f < nf; ++f)
      for (const auto& l : d.fibers[f].labels)
        labels.push_back(clash ? "i" + std::to_string(f) + ":" + l : l);
  }
  std::vector<std::vector<int>> tables;
  for (size_t op = 0; op < d.fibers[0].sig.operations.size(); ++op) {
    int k = d.fibers[0].sig.operations[op].arity;
    if (k == 0) {
      int f0 = *d.index.least;
      tables.push_back({ps.place[f0][d.fibers[f0].constant(static_cast<int>(op))]});
      continue;
    }
    std::vector<int> table;
    std::vector<int> t(k, 0);
    do {
      int j = ps.locate[t[0]].first;
      for (int i = 1; i < k; ++i) j = d.index.j(j, ps.locate[t[i]].first);
      std::vector<int> args(k);
      for (int i = 0; i < k; ++i) {
        auto [f, a] = ps.locate[t[i]];
        args[i] = d.trans(f, j)[a];
      }
      table.push_back(ps.place[j][d.fibers[j].apply(static_cast<int>(op), args)]);
    } while (next_tuple(t, total));
    tables.push_back(std::move(table));
  }
  ps.algebra = make_algebra(d.fibers[0].sig, std::move(labels), std::move(tables));
  return ps;
}

std::vector<Diagnostic> check_partition_function(const PartitionFunction& pf) {
  std::vector<Diagnostic> out;
  const FiniteAlgebra& A = pf.algebra;
  const int n = A.size();
  if (static_cast<int>(pf.table.size()) != n)
    return {{"TableShape", "⊙ must be a total binary table"}};
  for (const auto& row : pf.table) {
    if (static_cast<int>(row.size()) != n) return {{"TableShape", "⊙ row malformed"}};
    for (int v : row)
      if (v < 0 || v >= n) return {{"TableRange", "⊙ maps outside the carrier"}};
  }
  auto o = [&](int a, int b) { return pf.table[a][b]; };
  for (int a = 0; a < n; ++a)
    if (o(a, a) != a) {
      out.push_back({"PF1", "a⊙a != a at a=" + el(A, a)});
      break;
    }
  for (int a = 0; a < n && out.empty(); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (o(a, o(b, c)) != o(o(a, b), c)) {
          out.push_back({"PF2", "associativity witness (" + el(A, a) + "," + el(A, b) + "," +
                                    el(A, c) + ")"});
          a = b = n;
          break;
        }
        if (o(a, o(b, c)) != o(a, o(c, b))) {
          out.push_back({"PF3", "right-commutation witness (" + el(A, a) + "," + el(A, b) +
                                    "," + el(A, c) + ")"});
          a = b = n;
          break;
        }
      }
  for (size_t op = 0; op < A.sig.operations.size(); ++op) {
    int k = A.sig.operations[op].arity;
    if (k == 0) continue;
    const std::string& g = A.sig.operations[op].name;
    std::vector<int> t(k, 0);
    do {
      int v = A.apply(static_cast<int>(op), t);
      for (int b = 0; b < n; ++b) {
        std::vector<int> shifted(k);
        for (int i = 0; i < k; ++i) shifted[i] = o(t[i], b);
        if (o(v, b) != A.apply(static_cast<int>(op), shifted)) {
          out.push_back({"PF4", "g=" + g + ", b=" + el(A, b)});
          b = n;
          t.assign(k, n - 1);
          continue;
        }
        int rhs = b;
        for (int i = 0; i < k; ++i) rhs = o(rhs, t[i]);
        if (o(b, v) != rhs) {
          out.push_back({"PF5", "g=" + g + ", b=" + el(A, b)});
          b = n;
          t.assign(k, n - 1);
        }
      }
    } while (next_tuple(t, n));
  }
  for (size_t op = 0; op < A.sig.operations.size(); ++op) {
    if (A.sig.operations[op].arity != 0) continue;
    int c = A.constant(static_cast<int>(op));
    for (int a = 0; a < n; ++a)
      if (o(a, c) != a) {
        out.push_back({"PF6", "a⊙" + A.sig.operations[op].name + " != a at a=" + el(A, a)});
        break;
      }
  }
  return out;
}

PartitionFunction induced_partition_function(const PlonkaSum& ps) {
  const int n = ps.algebra.size();
  PartitionFunction pf{ps.algebra, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [i, la] = ps.locate[a];
      int j = ps.origin.index.j(i, ps.locate[b].first);
      pf.table[a][b] = ps.place[j][ps.origin.trans(i, j)[la]];
    }
  return pf;
}

PlonkaSum decompose(const FiniteAlgebra& alg, const PartitionFunction& pf) {
  auto ds = check_partition_function(pf);
  if (!ds.empty()) throw ValidationError("NotAPartitionFunction:\n" + diag_text(ds));
  const int n = alg.size();
  auto o = [&](int a, int b) { return pf.table[a][b]; };
  // item (1): fibers
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (o(a, b) == a && o(b, a) == b) rel.emplace_back(a, b);
  Partition fibers = Partition::from_pairs(n, rel);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (fibers.same(a, b) && !(o(a, b) == a && o(b, a) == b))
        throw ValidationError("NotAPartitionFunction: fiber relation is not transitive");
  auto blocks = fibers.blocks();  // block ids already ordered by minimal element
  const int m = fibers.num_blocks();
  // item (2): order and join. i∨j is read off as the block of a⊙b; verified
  // independent of the representatives and consistent with the witness order.
  std::vector<std::vector<int>> join(m, std::vector<int>(m, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int& cell = join[fibers.block_id(a)][fibers.block_id(b)];
      int v = fibers.block_id(o(a, b));
      if (cell < 0)
        cell = v;
      else if (cell != v)
        throw ValidationError("InconsistentTransitions: join block depends on representatives");
    }
  JoinSemilattice index;
  try {
    index = make_semilattice(join, std::nullopt);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("NotAPartitionFunction: block order is not a semilattice: ") +
                          e.what());
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool witness = false;  // ∃ a∈A_i, b∈A_j with b⊙a = b
      for (int a : blocks[i])
        for (int b : blocks[j])
          if (o(b, a) == b) witness = true;
      if (witness != index.leq(i, j))
        throw ValidationError("NotAPartitionFunction: witness order disagrees with joins");
    }
  if (alg.sig.has_constants()) {
    int least = -1;
    for (size_t op = 0; op < alg.sig.operations.size(); ++op)
      if (alg.sig.operations[op].arity == 0) {
        int blk = fibers.block_id(alg.constant(static_cast<int>(op)));
        if (least < 0) least = blk;
        if (blk != least)
          throw ValidationError("NotAPartitionFunction: constants in different fibers");
      }
    for (int i = 0; i < m; ++i)
      if (!index.leq(least, i))
        throw ValidationError("NotAPartitionFunction: constants not in the least fiber");
    index.least = least;
  } else {
    for (int i = 0; i < m; ++i) {
      bool below_all = true;
      for (int j = 0; j < m; ++j) below_all = below_all && index.leq(i, j);
      if (below_all) {
        index.least = i;
        break;
      }
    }
  }
  // fibers as algebras; local index = rank within the block
  std::vector<int> local(n);
  for (int i = 0; i < m; ++i)
    for (size_t r = 0; r < blocks[i].size(); ++r) local[blocks[i][r]] = static_cast<int>(r);
  std::vector<FiniteAlgebra> fiber_algs;
  for (int i = 0; i < m; ++i) {
    const auto& blk = blocks[i];
    std::vector<std::string> labels;
    for (int e : blk) labels.push_back(alg.labels[e]);
    std::vector<std::vector<int>> tables;
    for (size_t op = 0; op < alg.sig.operations.size(); ++op) {
      int k = alg.sig.operations[op].arity;
      if (k == 0) {
        // c^{A_i} = c^A ⊙ b for b in the block; independence verified
        int c = alg.constant(static_cast<int>(op));
        int v = -1;
        for (int b : blk) {
          int w = o(c, b);
          if (v < 0) v = w;
          if (w != v || fibers.block_id(w) != i)
            throw ValidationError("InconsistentTransitions: constant relocation ambiguous");
        }
        tables.push_back({local[v]});
        continue;
      }
      std::vector<int> table;
      std::vector<int> t(k, 0);
      do {
        std::vector<int> args(k);
        for (int x = 0; x < k; ++x) args[x] = blk[t[x]];
        int v = alg.apply(static_cast<int>(op), args);
        if (fibers.block_id(v) != i)
          throw ValidationError("NotAPartitionFunction: block not closed under " +
                                alg.sig.operations[op].name);
        table.push_back(local[v]);
      } while (next_tuple(t, static_cast<int>(blk.size())));
      tables.push_back(std::move(table));
    }
    fiber_algs.push_back(make_algebra(alg.sig, std::move(labels), std::move(tables)));
  }
  // item (3): transitions, with exhaustive independence-of-b verification
  std::map<std::pair<int, int>, std::vector<int>> trans;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !index.leq(i, j)) continue;
      std::vector<int> map(blocks[i].size(), -1);
      for (size_t r = 0; r < blocks[i].size(); ++r) {
        int x = blocks[i][r];
        for (int b : blocks[j]) {
          int v = o(x, b);
          if (fibers.block_id(v) != j)
            throw ValidationError("InconsistentTransitions: x⊙b outside the target fiber");
          if (map[r] < 0)
            map[r] = local[v];
          else if (map[r] != local[v])
            throw ValidationError("InconsistentTransitions: p_ij depends on the choice of b");
        }
      }
      trans[{i, j}] = std::move(map);
    }
  PlonkaSum ps;
  ps.origin = make_system(std::move(index), std::move(fiber_algs), std::move(trans));
  ps.algebra = alg;
  ps.locate.resize(n);
  ps.place.resize(m);
  for (int i = 0; i < m; ++i)
    for (int e : blocks[i]) {
      ps.locate[e] = {i, local[e]};
      ps.place[i].push_back(e);
    }
  // item (4): the recomposition must reproduce alg table-for-table
  PlonkaSum re = compose(ps.origin);
  std::vector<int> perm(n);  // recomposed global -> original global
  for (int g = 0; g < n; ++g) {
    auto [f, l] = re.locate[g];
    perm[g] = ps.place[f][l];
  }
  for (size_t op = 0; op < alg.sig.operations.size(); ++op) {
    int k = alg.sig.operations[op].arity;
    std::vector<int> t(k, 0);
    do {
      std::vector<int> orig(k);
      for (int x = 0; x < k; ++x) orig[x] = perm[t[x]];
      if (perm[re.algebra.apply(static_cast<int>(op), t)] !=
          alg.apply(static_cast<int>(op), orig))
        throw ValidationError("InconsistentTransitions: recomposition mismatch");
    } while (next_tuple(t, n));
  }
  return ps;
}

bool check_semilattice_of_subalgebras(const FiniteAlgebra& alg, const Partition& blocks,
                                      const JoinSemilattice& order, int least_block) {
  if (blocks.size() != alg.size() || blocks.num_blocks() != order.size())
    throw ValidationError("ShapeMismatch: blocks/order sizes disagree");
  if (least_block < 0 || least_block >= order.size())
    throw ValidationError("ShapeMismatch: least block out of range");
  for (int i = 0; i < order.size(); ++i)
    if (!order.leq(least_block, i)) return false;
  for (size_t op = 0; op < alg.sig.operations.size(); ++op) {
    int k = alg.sig.operations[op].arity;
    if (k == 0) {
      if (blocks.block_id(alg.constant(static_cast<int>(op))) != least_block) return false;
      continue;
    }
    std::vector<int> t(k, 0);
    do {
      int j = blocks.block_id(t[0]);
      for (int i = 1; i < k; ++i) j = order.j(j, blocks.block_id(t[i]));
      if (blocks.block_id(alg.apply(static_cast<int>(op), t)) != j) return false;
    } while (next_tuple(t, alg.size()));
  }
  return true;
}

}  // namespace plonka
