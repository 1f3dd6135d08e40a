#include "plonka/direct_system.hpp"

#include <numeric>
#include <string>

#include "plonka/plonka_sum.hpp"

namespace plonka {

std::vector<int> DirectSystem::trans(int i, int j) const {
  if (i == j) {
    std::vector<int> id(fibers[i].size());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  if (!index.leq(i, j))
    throw ValidationError("transition requested for incomparable pair (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  auto it = transitions.find({i, j});
  if (it == transitions.end())
    throw ValidationError("missing transition (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  return it->second;
}

std::vector<Diagnostic> validate_system(const DirectSystem& d) {
  std::vector<Diagnostic> out = d.index.validate();
  const int n = d.index.size();
  if (static_cast<int>(d.fibers.size()) != n) {
    out.push_back({"FiberCount", "expected one fiber per index"});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    auto ds = d.fibers[i].validate();
    for (auto& dg : ds)
      out.push_back({dg.code, "fiber " + std::to_string(i) + ": " + dg.message});
    if (d.fibers[i].sig != d.fibers[0].sig)
      out.push_back({"SignatureMismatch", "fiber " + std::to_string(i) + " differs"});
  }
  if (!out.empty()) return out;
  if (d.fibers[0].sig.has_constants() && !d.index.least)
    out.push_back({"MissingLeast", "constants require a least index"});
  for (const auto& [key, map] : d.transitions) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n || i == j || !d.index.leq(i, j)) {
      out.push_back({"BadTransitionKey", "(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") is not a strictly comparable pair"});
      continue;
    }
    if (static_cast<int>(map.size()) != d.fibers[i].size()) {
      out.push_back({"TransitionShape", "map (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") has the wrong domain size"});
      continue;
    }
    if (!is_homomorphism(d.fibers[i], d.fibers[j], map))
      out.push_back({"NotAHomomorphism", "transition (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") fails preservation"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.index.leq(i, j) && !d.transitions.count({i, j}))
        out.push_back({"MissingTransition",
                       "(" + std::to_string(i) + "," + std::to_string(j) + ")"});
  if (!out.empty()) return out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(d.index.leq(i, j) && d.index.leq(j, k))) continue;
        auto pij = d.trans(i, j);
        auto pjk = d.trans(j, k);
        auto pik = d.trans(i, k);
        for (int a = 0; a < d.fibers[i].size(); ++a)
          if (pik[a] != pjk[pij[a]]) {
            out.push_back({"CompositionLaw", "p_" + std::to_string(i) + std::to_string(k) +
                                                 " != p_" + std::to_string(j) +
                                                 std::to_string(k) + " ∘ p_" + std::to_string(i) +
                                                 std::to_string(j) + " at element " +
                                                 std::to_string(a)});
            a = d.fibers[i].size();
          }
      }
  return out;
}

DirectSystem make_system(JoinSemilattice index, std::vector<FiniteAlgebra> fibers,
                         std::map<std::pair<int, int>, std::vector<int>> transitions) {
  DirectSystem d{std::move(index), std::move(fibers), std::move(transitions)};
  auto ds = validate_system(d);
  if (!ds.empty()) throw ValidationError("invalid direct system:\n" + diag_text(ds));
  return d;
}

std::vector<Diagnostic> validate_morphism(const SystemMorphism& m) {
  std::vector<Diagnostic> out;
  auto ds = validate_system(m.source);
  auto dt = validate_system(m.target);
  for (auto& d : ds) out.push_back({d.code, "source: " + d.message});
  for (auto& d : dt) out.push_back({d.code, "target: " + d.message});
  if (!out.empty()) return out;
  const int n = m.source.index.size();
  if (static_cast<int>(m.phi.size()) != n ||
      static_cast<int>(m.components.size()) != n) {
    out.push_back({"ShapeMismatch", "phi/components must cover every source index"});
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (m.phi[i] < 0 || m.phi[i] >= m.target.index.size()) {
      out.push_back({"IndexOutOfRange", "phi(" + std::to_string(i) + ")"});
      return out;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.target.index.j(m.phi[a], m.phi[b]) != m.phi[m.source.index.j(a, b)]) {
        out.push_back({"PhiNotJoinPreserving",
                       "witness (" + std::to_string(a) + "," + std::to_string(b) + ")"});
        a = n;
        break;
      }
  // Strengthening: least must map to least when both systems declare one.
  if (m.source.index.least && m.target.index.least &&
      m.phi[*m.source.index.least] != *m.target.index.least)
    out.push_back({"PhiNotLeastPreserving", "least index is not preserved"});
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m.components[i].size()) != m.source.fibers[i].size()) {
      out.push_back({"ComponentShape", "component " + std::to_string(i)});
      continue;
    }
    if (!is_homomorphism(m.source.fibers[i], m.target.fibers[m.phi[i]], m.components[i]))
      out.push_back({"ComponentNotHom", "component " + std::to_string(i)});
  }
  if (!out.empty()) return out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !m.source.index.leq(i, j)) continue;
      auto p = m.source.trans(i, j);
      auto q = m.target.trans(m.phi[i], m.phi[j]);
      for (int a = 0; a < m.source.fibers[i].size(); ++a)
        if (q[m.components[i][a]] != m.components[j][p[a]]) {
          out.push_back({"SquareNotCommuting", "witness (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "," + std::to_string(a) +
                                                   ")"});
          a = m.source.fibers[i].size();
        }
    }
  return out;
}

SystemMorphism compose_morphisms(const SystemMorphism& g, const SystemMorphism& f) {
  SystemMorphism out;
  out.source = f.source;
  out.target = g.target;
  out.phi.resize(f.phi.size());
  out.components.resize(f.phi.size());
  for (size_t i = 0; i < f.phi.size(); ++i) {
    out.phi[i] = g.phi[f.phi[i]];
    const auto& gi = g.components[f.phi[i]];
    out.components[i].resize(f.components[i].size());
    for (size_t a = 0; a < f.components[i].size(); ++a)
      out.components[i][a] = gi[f.components[i][a]];
  }
  return out;
}

FiniteAlgebra trivial_algebra(const Signature& sig, const std::string& label) {
  // every table over a 1-element carrier has exactly one entry
  std::vector<std::vector<int>> tables(sig.operations.size(), std::vector<int>{0});
  return make_algebra(sig, {label}, std::move(tables));
}

DirectSystem star(const FiniteAlgebra& b) {
  JoinSemilattice two = chain_semilattice(2);
  FiniteAlgebra top = trivial_algebra(b.sig, "inf");
  std::map<std::pair<int, int>, std::vector<int>> trans;
  trans[{0, 1}] = std::vector<int>(b.size(), 0);
  return make_system(std::move(two), {b, std::move(top)}, std::move(trans));
}

Homomorphism extend_hom(const DirectSystem& d, int i, const Homomorphism& g) {
  if (i < 0 || i >= d.index.size())
    throw ValidationError("IndexOutOfRange: fiber " + std::to_string(i));
  PlonkaSum src = compose(d);
  PlonkaSum tgt = compose(star(g.target));
  const int inf = g.target.size();  // global index of ∞ in the star sum
  std::vector<int> map(src.algebra.size());
  for (int a = 0; a < src.algebra.size(); ++a) {
    auto [fj, la] = src.locate[a];
    if (d.index.leq(fj, i))
      map[a] = g.map[d.trans(fj, i)[la]];  // bottom fiber of the star is g.target
    else
      map[a] = inf;
  }
  return Homomorphism{src.algebra, tgt.algebra, std::move(map)};
}

}  // namespace plonka
