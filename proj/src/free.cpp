#include "plonka/free.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace plonka {

JoinSemilattice finite_subsets_semilattice(int n) {
  if (n < 0 || n > 6)
    throw SizeCapError("finite_subsets_semilattice supports 0..6 generators");
  const int sz = 1 << n;
  std::vector<std::vector<int>> t(sz, std::vector<int>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) t[a][b] = a | b;
  return make_semilattice(std::move(t), 0);
}

static std::vector<int> sorted_bits(int mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if ((mask >> b) & 1) out.push_back(b);
  return out;
}

FreeReport free_plonka(int n, const FreeFiberProvider& provider) {
  if (n < 0 || n > provider.max_generators)
    throw SizeCapError("ProviderFailure: generator count outside the provider range");
  JoinSemilattice index = finite_subsets_semilattice(n);
  const int sz = index.size();
  std::vector<FiniteAlgebra> fibers(sz);
  std::vector<std::vector<int>> gens(sz);  // per-fiber generator elements
  for (int s = 0; s < sz; ++s) {
    auto [alg, g] = provider.make(std::popcount(static_cast<unsigned>(s)));
    // tag labels by the subset so the composed carrier reads cleanly
    for (auto& l : alg.labels) l = "s" + std::to_string(s) + ":" + l;
    fibers[s] = std::move(alg);
    gens[s] = std::move(g);
  }
  std::map<std::pair<int, int>, std::vector<int>> trans;
  for (int s = 0; s < sz; ++s)
    for (int t = 0; t < sz; ++t) {
      if (s == t || (s | t) != t) continue;
      auto sbits = sorted_bits(s);
      auto tbits = sorted_bits(t);
      std::vector<int> images(sbits.size());
      for (size_t r = 0; r < sbits.size(); ++r) {
        auto pos = std::find(tbits.begin(), tbits.end(), sbits[r]) - tbits.begin();
        images[r] = gens[t][pos];
      }
      std::vector<int> map = provider.extend(static_cast<int>(sbits.size()), fibers[t], images);
      std::set<int> img_set(map.begin(), map.end());
      if (static_cast<int>(img_set.size()) != fibers[s].size())
        throw ValidationError("InjectivityViolation: transition " + std::to_string(s) + "->" +
                              std::to_string(t) + " is not injective");
      trans[{s, t}] = std::move(map);
    }
  FreeReport rep;
  rep.system = make_system(std::move(index), std::move(fibers), std::move(trans));
  std::vector<long long> sizes;
  for (int k = 0; k <= n; ++k) sizes.push_back(provider.make(k).first.size());
  rep.predicted_size = free_count(n, sizes);
  PlonkaSum ps = compose(rep.system);
  rep.actual_size = ps.algebra.size();
  for (int j = 0; j < n; ++j)
    rep.generator_locations["x" + std::to_string(j + 1)] = ps.place[1 << j][gens[1 << j][0]];
  return rep;
}

std::vector<Diagnostic> check_freeness_conditions(const DirectSystem& d,
                                                  const std::map<int, int>& claimed_gens) {
  std::vector<Diagnostic> out;
  const int g = static_cast<int>(claimed_gens.size());
  const int ni = d.index.size();
  // (1) the index must be the free semilattice-with-zero on the claimed
  // generator indices: every element a unique join of generators.
  int zero = -1;
  if (d.index.least) {
    zero = *d.index.least;
  } else {
    for (int i = 0; i < ni; ++i) {
      bool bottom = true;
      for (int j = 0; j < ni; ++j) bottom = bottom && d.index.leq(i, j);
      if (bottom) {
        zero = i;
        break;
      }
    }
  }
  if (ni != (1 << g)) {
    out.push_back({"Condition1", "index size " + std::to_string(ni) + " != 2^" +
                                     std::to_string(g)});
  } else if (zero < 0) {
    out.push_back({"Condition1", "no least element"});
  } else {
    std::vector<int> singletons;
    for (auto& [s, _] : claimed_gens) singletons.push_back(s);
    std::set<int> reached;
    bool dup = false;
    for (int mask = 0; mask < (1 << g); ++mask) {
      int v = zero;
      for (int b = 0; b < g; ++b)
        if ((mask >> b) & 1) v = d.index.j(v, singletons[b]);
      if (!reached.insert(v).second) dup = true;
    }
    if (dup || static_cast<int>(reached.size()) != ni)
      out.push_back({"Condition1", "joins of the generators do not enumerate the index freely"});
  }
  if (!out.empty()) return out;
  // derived generator tuple at each index: the routed claimed generators
  std::vector<std::vector<int>> routed(ni);
  for (int i = 0; i < ni; ++i)
    for (auto& [s, ge] : claimed_gens)
      if (d.index.leq(s, i)) routed[i].push_back(d.trans(s, i)[ge]);
  // (2) every fiber generated by its routed generators
  for (int i = 0; i < ni; ++i) {
    auto sub = generated_subalgebra(d.fibers[i], routed[i]);
    if (static_cast<int>(sub.size()) != d.fibers[i].size())
      out.push_back({"Condition2", "fiber " + std::to_string(i) +
                                       " is not generated by its routed generators"});
  }
  // (3) transitions injective; routed generators pairwise distinct
  for (const auto& [key, map] : d.transitions) {
    std::set<int> img(map.begin(), map.end());
    if (img.size() != map.size())
      out.push_back({"Condition3", "transition (" + std::to_string(key.first) + "," +
                                       std::to_string(key.second) + ") is not injective"});
  }
  for (int i = 0; i < ni; ++i) {
    std::set<int> distinct(routed[i].begin(), routed[i].end());
    if (distinct.size() != routed[i].size())
      out.push_back({"Condition3", "routed generators collide in fiber " + std::to_string(i)});
  }
  return out;
}

long long free_count(int n, const std::vector<long long>& sizes) {
  long long total = 0;
  long long binom = 1;  // C(n,0)
  for (int j = 0; j <= n; ++j) {
    total += binom * sizes[j];
    binom = binom * (n - j) / (j + 1);
  }
  return total;
}

FreeFiberProvider boolean_free_provider() {
  FreeFiberProvider p;
  p.variety = "boolean";
  p.max_generators = 3;
  Signature sig{{{"or", 2}, {"and", 2}, {"not", 1}, {"zero", 0}, {"one", 0}}};
  p.make = [sig](int k) {
    if (k < 0 || k > 3) throw SizeCapError("boolean provider supports 0..3 generators");
    const int rows = 1 << k;            // valuations
    const int n = 1 << rows;            // truth tables
    const int full = n - 1;
    std::vector<std::string> labels(n);
    for (int e = 0; e < n; ++e) labels[e] = "t" + std::to_string(e);
    std::vector<int> tor(static_cast<size_t>(n) * n), tand(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        tor[static_cast<size_t>(a) * n + b] = a | b;
        tand[static_cast<size_t>(a) * n + b] = a & b;
      }
    std::vector<int> tnot(n);
    for (int a = 0; a < n; ++a) tnot[a] = full & ~a;
    FiniteAlgebra alg = make_algebra(
        sig, std::move(labels),
        {std::move(tor), std::move(tand), std::move(tnot), {0}, {full}});
    std::vector<int> gens(k);
    for (int r = 0; r < k; ++r) {
      int mask = 0;
      for (int v = 0; v < rows; ++v)
        if ((v >> r) & 1) mask |= 1 << v;
      gens[r] = mask;
    }
    return std::make_pair(std::move(alg), std::move(gens));
  };
  p.extend = [](int k, const FiniteAlgebra& target, const std::vector<int>& images) {
    const int rows = 1 << k;
    const int n = 1 << rows;
    int o_or = target.sig.find("or"), o_and = target.sig.find("and");
    int o_not = target.sig.find("not"), o_zero = target.sig.find("zero");
    if (o_or < 0 || o_and < 0 || o_not < 0 || o_zero < 0)
      throw ValidationError("ProviderFailure: target lacks the Boolean signature");
    int o_one = target.sig.find("one");
    std::vector<int> map(n);
    for (int tt = 0; tt < n; ++tt) {
      // canonical disjunctive normal form evaluated on the generator images
      int acc = -1;
      for (int v = 0; v < rows; ++v) {
        if (!((tt >> v) & 1)) continue;
        int term = -1;
        for (int r = 0; r < k; ++r) {
          int lit = ((v >> r) & 1) ? images[r] : target.apply(o_not, {images[r]});
          term = term < 0 ? lit : target.apply(o_and, {term, lit});
        }
        if (term < 0) term = target.constant(o_one);  // k = 0, tt = 1
        acc = acc < 0 ? term : target.apply(o_or, {acc, term});
      }
      map[tt] = acc < 0 ? target.constant(o_zero) : acc;
    }
    return map;
  };
  return p;
}

}  // namespace plonka
