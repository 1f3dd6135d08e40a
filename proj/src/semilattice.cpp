#include "plonka/semilattice.hpp"

#include <algorithm>
#include <string>

namespace plonka {

std::vector<Diagnostic> JoinSemilattice::validate() const {
  std::vector<Diagnostic> out;
  const int n = size();
  if (n <= 0) {
    out.push_back({"EmptyCarrier", "semilattice must be nonempty"});
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(join[a].size()) != n) {
      out.push_back({"TableShape", "join table row " + std::to_string(a) + " malformed"});
      return out;
    }
    for (int b = 0; b < n; ++b)
      if (join[a][b] < 0 || join[a][b] >= n) {
        out.push_back({"TableRange", "join table maps outside the carrier"});
        return out;
      }
  }
  for (int a = 0; a < n; ++a)
    if (join[a][a] != a) {
      out.push_back({"Idempotence", "join(" + std::to_string(a) + "," + std::to_string(a) +
                                        ") != " + std::to_string(a)});
      break;
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (join[a][b] != join[b][a]) {
        out.push_back({"Commutativity", "witness (" + std::to_string(a) + "," +
                                            std::to_string(b) + ")"});
        a = n;
        break;
      }
  for (int a = 0; a < n && out.empty(); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (join[a][join[b][c]] != join[join[a][b]][c]) {
          out.push_back({"Associativity", "witness (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")"});
          a = b = n;
          break;
        }
  if (least) {
    if (*least < 0 || *least >= n)
      out.push_back({"LeastRange", "declared least element out of range"});
    else
      for (int a = 0; a < n; ++a)
        if (join[*least][a] != a) {
          out.push_back({"LeastNotNeutral", "join(least," + std::to_string(a) + ") != " +
                                                std::to_string(a)});
          break;
        }
  }
  return out;
}

JoinSemilattice make_semilattice(std::vector<std::vector<int>> join, std::optional<int> least) {
  JoinSemilattice s{std::move(join), least};
  auto ds = s.validate();
  if (!ds.empty()) throw ValidationError("invalid semilattice:\n" + diag_text(ds));
  return s;
}

JoinSemilattice chain_semilattice(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a > b ? a : b;
  return make_semilattice(std::move(t), 0);
}

JoinSemilattice diamond_semilattice() {
  // 0 bottom, 1 and 2 incomparable, 3 top
  std::vector<std::vector<int>> t = {
      {0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return make_semilattice(std::move(t), 0);
}

IndexRelation IndexRelation::diagonal(int n) {
  IndexRelation r{n, {}};
  for (int i = 0; i < n; ++i) r.pairs.insert({i, i});
  return r;
}

IndexRelation IndexRelation::from_partition(const Partition& p) {
  IndexRelation r{p.size(), {}};
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.same(a, b)) r.pairs.insert({a, b});
  return r;
}

bool is_semilattice_congruence(const JoinSemilattice& s, const Partition& p) {
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.same(a, b))
        for (int c = 0; c < n; ++c)
          if (!p.same(s.j(a, c), s.j(b, c))) return false;
  return true;
}

std::vector<Partition> all_semilattice_congruences(const JoinSemilattice& s, int cap) {
  if (s.size() > cap)
    throw SizeCapError("semilattice size " + std::to_string(s.size()) +
                       " exceeds cap " + std::to_string(cap));
  std::vector<Partition> out;
  for (auto& p : all_partitions(s.size()))
    if (is_semilattice_congruence(s, p)) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

Partition cg_semilattice(const JoinSemilattice& s, const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (uf.find(a) == uf.find(b))
          for (int c = 0; c < n; ++c)
            if (uf.unite(s.j(a, c), s.j(b, c))) changed = true;
  }
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = uf.find(i);
  return Partition::from_block_of(ids);
}

bool is_upper_transitive(const JoinSemilattice& s, const IndexRelation& r) {
  for (auto [i, j] : r.pairs)
    for (auto [j2, k] : r.pairs)
      if (j2 == j && !r.has(i, s.j(i, k))) return false;
  return true;
}

bool is_join_closed(const JoinSemilattice& s, const IndexRelation& r) {
  for (auto [a, b] : r.pairs)
    for (auto [c, d] : r.pairs)
      if (!r.has(s.j(a, c), s.j(b, d))) return false;
  return true;
}

IndexRelation closure_refl_symm_join_ut(const JoinSemilattice& s, const IndexRelation& r) {
  IndexRelation out = r;
  out.n = s.size();
  for (int i = 0; i < s.size(); ++i) out.pairs.insert({i, i});
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = out.pairs;
    for (auto [a, b] : snapshot)
      if (out.pairs.insert({b, a}).second) changed = true;
    snapshot = out.pairs;
    for (auto [a, b] : snapshot)
      for (auto [c, d] : snapshot)
        if (out.pairs.insert({s.j(a, c), s.j(b, d)}).second) changed = true;
    snapshot = out.pairs;
    for (auto [i, j] : snapshot)
      for (auto [j2, k] : snapshot)
        if (j2 == j && out.pairs.insert({i, s.j(i, k)}).second) changed = true;
  }
  return out;
}

Partition c_of_relation(const JoinSemilattice& s, const IndexRelation& r) {
  const int n = s.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[i][j] = r.has(i, s.j(i, j)) && r.has(j, s.j(i, j));
  for (int i = 0; i < n; ++i)
    if (!rel[i][i]) throw ValidationError("C_S is not reflexive at " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) throw ValidationError("C_S is not symmetric");
      for (int k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k])
          throw ValidationError("C_S is not transitive");
    }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rel[i][j]) pairs.emplace_back(i, j);
  return Partition::from_pairs(n, pairs);
}

JoinSemilattice quotient_semilattice(const JoinSemilattice& s, const Partition& c) {
  const int m = c.num_blocks();
  std::vector<std::vector<int>> t(m, std::vector<int>(m, -1));
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      int& cell = t[c.block_id(a)][c.block_id(b)];
      int v = c.block_id(s.j(a, b));
      if (cell < 0)
        cell = v;
      else if (cell != v)
        throw ValidationError("partition is not a semilattice congruence");
    }
  std::optional<int> least;
  if (s.least) least = c.block_id(*s.least);
  return make_semilattice(std::move(t), least);
}

}  // namespace plonka
