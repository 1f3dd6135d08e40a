#include "plonka/algebra.hpp"

#include <algorithm>
#include <set>

namespace plonka {

int Signature::find(const std::string& name) const {
  for (size_t i = 0; i < operations.size(); ++i)
    if (operations[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Signature::plural() const {
  for (const auto& op : operations)
    if (op.arity >= 2) return true;
  return false;
}

bool Signature::has_constants() const {
  for (const auto& op : operations)
    if (op.arity == 0) return true;
  return false;
}

std::vector<Diagnostic> Signature::validate() const {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  for (const auto& op : operations) {
    if (op.name.empty())
      out.push_back({"EmptyOperationName", "signature contains an empty operation name"});
    if (!seen.insert(op.name).second)
      out.push_back({"DuplicateOperation", "operation '" + op.name + "' declared twice"});
    if (op.arity < 0)
      out.push_back({"NegativeArity", "operation '" + op.name + "' has negative arity"});
    if (op.arity > kMaxArity)
      out.push_back({"ArityCap", "operation '" + op.name + "' exceeds the arity cap of " +
                                     std::to_string(kMaxArity)});
  }
  return out;
}

static size_t table_size(int n, int arity) {
  size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<size_t>(n);
  return s;
}

int FiniteAlgebra::apply(int op, const std::vector<int>& args) const {
  size_t idx = 0;
  for (int a : args) idx = idx * static_cast<size_t>(size()) + static_cast<size_t>(a);
  return tables[op][idx];
}

std::vector<Diagnostic> FiniteAlgebra::validate() const {
  std::vector<Diagnostic> out = sig.validate();
  const int n = size();
  if (n <= 0) out.push_back({"EmptyCarrier", "carrier must be nonempty"});
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      out.push_back({"DuplicateLabel", "element label '" + l + "' repeated"});
  if (tables.size() != sig.operations.size()) {
    out.push_back({"TableCount", "expected one table per operation"});
    return out;
  }
  for (size_t i = 0; i < tables.size(); ++i) {
    const auto& op = sig.operations[i];
    if (op.arity > kMaxArity || op.arity < 0) continue;  // reported above
    if (tables[i].size() != table_size(n, op.arity)) {
      out.push_back({"TableShape", "table for '" + op.name + "' has " +
                                       std::to_string(tables[i].size()) + " entries, expected " +
                                       std::to_string(table_size(n, op.arity))});
      continue;
    }
    for (int v : tables[i])
      if (v < 0 || v >= n) {
        out.push_back({"TableRange", "table for '" + op.name + "' maps outside the carrier"});
        break;
      }
  }
  return out;
}

FiniteAlgebra make_algebra(Signature sig, std::vector<std::string> labels,
                           std::vector<std::vector<int>> tables) {
  FiniteAlgebra a{std::move(sig), std::move(labels), std::move(tables)};
  auto ds = a.validate();
  if (!ds.empty()) throw ValidationError("invalid algebra:\n" + diag_text(ds));
  return a;
}

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  if (t.is_var) {
    out.insert(t.head);
    return out;
  }
  for (const auto& a : t.args) {
    auto sub = term_vars(a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& v) {
  if (t.is_var) {
    auto it = v.find(t.head);
    if (it == v.end()) throw ValidationError("UnboundVariable: " + t.head);
    return it->second;
  }
  int op = alg.sig.find(t.head);
  if (op < 0) throw ValidationError("UnknownOperation: " + t.head);
  if (alg.sig.operations[op].arity != static_cast<int>(t.args.size()))
    throw ValidationError("ArityMismatch: " + t.head);
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term(alg, a, v));
  return alg.apply(op, args);
}

bool satisfies_identity(const FiniteAlgebra& alg, const Identity& id) {
  auto vars = term_vars(id.lhs);
  auto rv = term_vars(id.rhs);
  vars.insert(rv.begin(), rv.end());
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::vector<int> t(vs.size(), 0);
  Assignment v;
  do {
    for (size_t i = 0; i < vs.size(); ++i) v[vs[i]] = t[i];
    if (eval_term(alg, id.lhs, v) != eval_term(alg, id.rhs, v)) return false;
  } while (next_tuple(t, alg.size()));
  return true;
}

bool is_regular(const Identity& id) { return term_vars(id.lhs) == term_vars(id.rhs); }

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                     const std::vector<int>& map) {
  if (src.sig != dst.sig) return false;
  if (map.size() != static_cast<size_t>(src.size())) return false;
  for (int v : map)
    if (v < 0 || v >= dst.size()) return false;
  for (size_t op = 0; op < src.sig.operations.size(); ++op) {
    int k = src.sig.operations[op].arity;
    std::vector<int> t(k, 0);
    do {
      std::vector<int> imgs(k);
      for (int i = 0; i < k; ++i) imgs[i] = map[t[i]];
      if (map[src.apply(op, t)] != dst.apply(op, imgs)) return false;
    } while (next_tuple(t, src.size()));
  }
  return true;
}

bool check_homomorphism(const Homomorphism& h) {
  return is_homomorphism(h.source, h.target, h.map);
}

std::vector<int> generated_subalgebra(const FiniteAlgebra& alg, const std::vector<int>& seed) {
  std::vector<bool> in(alg.size(), false);
  for (int e : seed) in[e] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t op = 0; op < alg.sig.operations.size(); ++op) {
      int k = alg.sig.operations[op].arity;
      std::vector<int> t(k, 0);
      do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = in[t[i]];
        if (ok) {
          int v = alg.apply(op, t);
          if (!in[v]) {
            in[v] = true;
            changed = true;
          }
        }
      } while (next_tuple(t, alg.size()));
    }
  }
  std::vector<int> out;
  for (int i = 0; i < alg.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& algs) {
  if (algs.empty()) throw ValidationError("SignatureMismatch: empty product");
  for (const auto& a : algs)
    if (a.sig != algs[0].sig) throw ValidationError("SignatureMismatch: factors differ");
  const int m = static_cast<int>(algs.size());
  int n = 1;
  for (const auto& a : algs) n *= a.size();
  // element index <-> tuple of factor indices, row-major
  auto unrank = [&](int e) {
    std::vector<int> t(m);
    for (int i = m - 1; i >= 0; --i) {
      t[i] = e % algs[i].size();
      e /= algs[i].size();
    }
    return t;
  };
  std::vector<std::string> labels(n);
  for (int e = 0; e < n; ++e) {
    auto t = unrank(e);
    std::string l = "(";
    for (int i = 0; i < m; ++i) {
      if (i) l += ",";
      l += algs[i].labels[t[i]];
    }
    labels[e] = l + ")";
  }
  std::vector<std::vector<int>> tables;
  for (size_t op = 0; op < algs[0].sig.operations.size(); ++op) {
    int k = algs[0].sig.operations[op].arity;
    std::vector<int> table(table_size(n, k));
    std::vector<int> t(k, 0);
    size_t idx = 0;
    do {
      std::vector<std::vector<int>> comps(k);
      for (int i = 0; i < k; ++i) comps[i] = unrank(t[i]);
      int e = 0;
      for (int f = 0; f < m; ++f) {
        std::vector<int> args(k);
        for (int i = 0; i < k; ++i) args[i] = comps[i][f];
        e = e * algs[f].size() + algs[f].apply(op, args);
      }
      table[idx++] = e;
    } while (next_tuple(t, n));
    tables.push_back(std::move(table));
  }
  return make_algebra(algs[0].sig, std::move(labels), std::move(tables));
}

std::optional<std::vector<int>> extend_by_generation(const FiniteAlgebra& src,
                                                     const std::vector<int>& gens,
                                                     const FiniteAlgebra& dst,
                                                     const std::vector<int>& images) {
  std::vector<int> map(src.size(), -1);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] >= 0 && map[gens[i]] != images[i]) return std::nullopt;
    map[gens[i]] = images[i];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t op = 0; op < src.sig.operations.size(); ++op) {
      int k = src.sig.operations[op].arity;
      std::vector<int> t(k, 0);
      do {
        bool known = true;
        for (int i = 0; i < k && known; ++i) known = map[t[i]] >= 0;
        if (known) {
          std::vector<int> imgs(k);
          for (int i = 0; i < k; ++i) imgs[i] = map[t[i]];
          int v = src.apply(op, t);
          int w = dst.apply(op, imgs);
          if (map[v] < 0) {
            map[v] = w;
            changed = true;
          } else if (map[v] != w) {
            return std::nullopt;
          }
        }
      } while (next_tuple(t, src.size()));
    }
  }
  for (int v : map)
    if (v < 0) return std::nullopt;  // src not generated by gens
  if (!is_homomorphism(src, dst, map)) return std::nullopt;
  return map;
}

std::vector<std::vector<int>> all_homomorphisms(const FiniteAlgebra& src,
                                                const FiniteAlgebra& dst) {
  // Greedy generating set: constants first, then smallest missing elements.
  std::vector<int> gens;
  auto covered = generated_subalgebra(src, gens);
  while (static_cast<int>(covered.size()) < src.size()) {
    for (int e = 0; e < src.size(); ++e) {
      if (!std::binary_search(covered.begin(), covered.end(), e)) {
        gens.push_back(e);
        break;
      }
    }
    covered = generated_subalgebra(src, gens);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size(), 0);
  if (gens.empty()) {
    if (auto m = extend_by_generation(src, gens, dst, images)) out.push_back(*m);
    return out;
  }
  do {
    if (auto m = extend_by_generation(src, gens, dst, images)) out.push_back(*m);
  } while (next_tuple(images, dst.size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace plonka
