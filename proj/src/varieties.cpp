#include "plonka/varieties.hpp"

#include <string>

#include "plonka/plonka_sum.hpp"

namespace plonka {

namespace {

Term V(const std::string& n) { return Term::var(n); }
Term A(const std::string& op, std::vector<Term> args = {}) {
  return Term::app(op, std::move(args));
}
const Term x = V("x"), y = V("y"), z = V("z");

}  // namespace

Signature group_signature() { return Signature{{{"mul", 2}, {"inv", 1}}}; }
Signature ibsl_signature() {
  return Signature{{{"or", 2}, {"and", 2}, {"not", 1}, {"zero", 0}, {"one", 0}}};
}
Signature lattice_signature() { return Signature{{{"join", 2}, {"meet", 2}}}; }
Signature dwb_signature() {
  return Signature{{{"mul", 2}, {"circ", 2}, {"inv", 1}, {"cinv", 1}}};
}

std::vector<AxiomSuite> builtin_suites() {
  std::vector<AxiomSuite> out;
  {
    AxiomSuite s;
    s.name = "ibsl";
    s.sig = ibsl_signature();
    auto Or = [](Term a, Term b) { return A("or", {std::move(a), std::move(b)}); };
    auto And = [](Term a, Term b) { return A("and", {std::move(a), std::move(b)}); };
    auto Not = [](Term a) { return A("not", {std::move(a)}); };
    s.identities = {
        {"(1)", {Or(x, x), x}},
        {"(2)", {Or(x, y), Or(y, x)}},
        {"(3)", {Or(x, Or(y, z)), Or(Or(x, y), z)}},
        {"(4)", {Not(Not(x)), x}},
        {"(5)", {And(x, y), Not(Or(Not(x), Not(y)))}},
        {"(6)", {And(x, Or(Not(x), y)), And(x, y)}},
        {"(7)", {Or(A("zero"), x), x}},
        {"(8)", {A("one"), Not(A("zero"))}},
    };
    s.irregular_witness = Identity{Or(x, And(x, y)), x};
    out.push_back(std::move(s));
  }
  {
    AxiomSuite s;
    s.name = "clifford";
    s.sig = group_signature();
    auto M = [](Term a, Term b) { return A("mul", {std::move(a), std::move(b)}); };
    auto I = [](Term a) { return A("inv", {std::move(a)}); };
    s.identities = {
        {"(CS1)", {M(x, M(y, z)), M(M(x, y), z)}},
        {"(CS2)", {I(I(x)), x}},
        {"(CS3)", {M(x, M(I(x), x)), x}},
        {"(CS4)", {M(M(x, I(x)), M(y, I(y))), M(M(y, I(y)), M(x, I(x)))}},
        {"(CS5)", {M(x, I(x)), M(I(x), x)}},
    };
    s.irregular_witness = Identity{M(x, M(y, I(y))), x};
    out.push_back(std::move(s));
  }
  {
    AxiomSuite s;
    s.name = "dwb";
    s.sig = dwb_signature();
    auto M = [](Term a, Term b) { return A("mul", {std::move(a), std::move(b)}); };
    auto C = [](Term a, Term b) { return A("circ", {std::move(a), std::move(b)}); };
    auto I = [](Term a) { return A("inv", {std::move(a)}); };
    auto P = [](Term a) { return A("cinv", {std::move(a)}); };
    s.identities = {
        {"(DWB1)", {M(x, M(y, z)), M(M(x, y), z)}},
        {"(DWB2)", {I(I(x)), x}},
        {"(DWB3)", {M(x, M(I(x), x)), x}},
        {"(DWB4)", {M(M(x, I(x)), M(y, I(y))), M(M(y, I(y)), M(x, I(x)))}},
        {"(DWB5)", {M(x, I(x)), M(I(x), x)}},
        {"(DWB6)", {C(x, C(y, z)), C(C(x, y), z)}},
        {"(DWB7)", {P(P(x)), x}},
        {"(DWB8)", {C(x, C(P(x), x)), x}},
        {"(DWB9)", {C(C(x, P(x)), C(y, P(y))), C(C(y, P(y)), C(x, P(x)))}},
        {"(DWB10)", {C(x, M(y, z)), M(M(C(x, y), I(x)), C(x, z))}},
        {"(DWB11)", {M(x, I(x)), C(x, P(x))}},
    };
    s.irregular_witness = Identity{M(x, M(y, I(y))), x};
    out.push_back(std::move(s));
  }
  return out;
}

SuiteReport check_suite(const FiniteAlgebra& alg, const AxiomSuite& suite,
                        bool include_witness) {
  if (alg.sig != suite.sig)
    throw ValidationError("SignatureMismatch: algebra does not fit suite '" + suite.name + "'");
  SuiteReport rep;
  for (const auto& [name, id] : suite.identities) {
    bool ok = satisfies_identity(alg, id);
    rep.results.emplace_back(name, ok);
    rep.all_passed = rep.all_passed && ok;
  }
  if (include_witness && suite.irregular_witness)
    rep.witness_passed = satisfies_identity(alg, *suite.irregular_witness);
  return rep;
}

FiniteAlgebra z_group(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
  for (int a = 0; a < n; ++a) {
    inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return make_algebra(group_signature(), std::move(labels), {std::move(mul), std::move(inv)});
}

FiniteAlgebra klein_group() { return direct_product({z_group(2), z_group(2)}); }

FiniteAlgebra b2() {
  return make_algebra(ibsl_signature(), {"0", "1"},
                      {{0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}, {0}, {1}});
}

FiniteAlgebra b4() {
  // bitmask order: 0, a=01, a'=10, 1=11
  const int n = 4;
  std::vector<int> tor(16), tand(16), tnot(4);
  for (int a = 0; a < n; ++a) {
    tnot[a] = 3 & ~a;
    for (int b = 0; b < n; ++b) {
      tor[a * n + b] = a | b;
      tand[a * n + b] = a & b;
    }
  }
  return make_algebra(ibsl_signature(), {"0", "a", "a'", "1"},
                      {std::move(tor), std::move(tand), std::move(tnot), {0}, {3}});
}

FiniteAlgebra dwb_of_group(const FiniteAlgebra& g) {
  int mul = g.sig.find("mul"), inv = g.sig.find("inv");
  return make_algebra(dwb_signature(), g.labels,
                      {g.tables[mul], g.tables[mul], g.tables[inv], g.tables[inv]});
}

namespace {

FiniteAlgebra relabel(FiniteAlgebra a, std::vector<std::string> labels) {
  a.labels = std::move(labels);
  return a;
}

// Boolean homs between the bitmask-ordered b2/b4.
const std::vector<int> kB4toB2a = {0, 1, 0, 1};  // ultrafilter {a, 1}
const std::vector<int> kB4toB2b = {0, 0, 1, 1};  // ultrafilter {a', 1}
const std::vector<int> kB2toB4 = {0, 3};

}  // namespace

DirectSystem diamond_ibsl_system() {
  // index: 0 bottom, 1 = i, 2 = j, 3 top
  std::vector<FiniteAlgebra> fibers = {
      relabel(b4(), {"0a", "a", "a'", "1a"}),
      relabel(b2(), {"bot", "top"}),
      relabel(b4(), {"0b", "b", "b'", "1b"}),
      relabel(b4(), {"0c", "c", "c'", "1c"}),
  };
  std::map<std::pair<int, int>, std::vector<int>> trans;
  trans[{0, 1}] = kB4toB2a;         // 1a,a -> top; a',0a -> bot
  trans[{0, 2}] = {0, 1, 2, 3};     // identity copy
  trans[{0, 3}] = {0, 3, 0, 3};     // composite
  trans[{1, 3}] = kB2toB4;          // bot -> 0c, top -> 1c
  trans[{2, 3}] = {0, 3, 0, 3};     // 1b,b -> 1c; b',0b -> 0c
  return make_system(diamond_semilattice(), std::move(fibers), std::move(trans));
}

DirectSystem nontransitivity_system() {
  // indices: i = 0, j = 1, k = 2 with i,j incomparable, i∨j = k; no least
  JoinSemilattice idx = make_semilattice({{0, 2, 2}, {2, 1, 2}, {2, 2, 2}}, std::nullopt);
  Signature sig = lattice_signature();
  FiniteAlgebra l0 = make_algebra(sig, {"0"}, {{0}, {0}});
  FiniteAlgebra l1 = make_algebra(sig, {"1"}, {{0}, {0}});
  // 2-element lattice 2 < 3
  FiniteAlgebra l2 = make_algebra(sig, {"2", "3"}, {{0, 1, 1, 1}, {0, 0, 0, 1}});
  std::map<std::pair<int, int>, std::vector<int>> trans;
  trans[{0, 2}] = {1};  // 0 -> 3
  trans[{1, 2}] = {0};  // 1 -> 2
  return make_system(std::move(idx), {std::move(l0), std::move(l1), std::move(l2)},
                     std::move(trans));
}

std::vector<std::pair<std::string, FiniteAlgebra>> catalog_algebras() {
  std::vector<std::pair<std::string, FiniteAlgebra>> out;
  out.emplace_back("trivial_group", trivial_algebra(group_signature(), "e"));
  out.emplace_back("trivial_ibsl", trivial_algebra(ibsl_signature(), "*"));
  out.emplace_back("trivial_lattice", trivial_algebra(lattice_signature(), "*"));
  out.emplace_back("trivial_dwb", trivial_algebra(dwb_signature(), "e"));
  out.emplace_back("z2", z_group(2));
  out.emplace_back("z3", z_group(3));
  out.emplace_back("z4", z_group(4));
  out.emplace_back("klein", klein_group());
  out.emplace_back("b2", b2());
  out.emplace_back("b4", b4());
  out.emplace_back("dwb_z2", dwb_of_group(z_group(2)));
  out.emplace_back("dwb_z3", dwb_of_group(z_group(3)));
  out.emplace_back("ibsl3", compose(star(b2())).algebra);
  out.emplace_back("cliff3", compose(star(z_group(2))).algebra);
  out.emplace_back("sl2_group_sig", compose(star(trivial_algebra(group_signature(), "e"))).algebra);
  out.emplace_back("diamond_ibsl", compose(diamond_ibsl_system()).algebra);
  out.emplace_back("nontrans4", compose(nontransitivity_system()).algebra);
  return out;
}

std::vector<std::pair<std::string, DirectSystem>> catalog_systems() {
  std::vector<std::pair<std::string, DirectSystem>> out;
  auto single = [](FiniteAlgebra a) {
    return make_system(chain_semilattice(1), {std::move(a)}, {});
  };
  auto two_chain = [](FiniteAlgebra bot, FiniteAlgebra top, std::vector<int> map) {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = std::move(map);
    return make_system(chain_semilattice(2), {std::move(bot), std::move(top)},
                       std::move(trans));
  };
  FiniteAlgebra tg = trivial_algebra(group_signature(), "e");
  FiniteAlgebra tl = trivial_algebra(lattice_signature(), "*");
  FiniteAlgebra ti = trivial_algebra(ibsl_signature(), "*");
  FiniteAlgebra tdwb = trivial_algebra(dwb_signature(), "e");
  // singletons
  out.emplace_back("single_b2", single(b2()));
  out.emplace_back("single_b4", single(b4()));
  out.emplace_back("single_z2", single(z_group(2)));
  out.emplace_back("single_klein", single(klein_group()));
  // stars
  out.emplace_back("star_b2", star(b2()));
  out.emplace_back("star_b4", star(b4()));
  out.emplace_back("star_z2", star(z_group(2)));
  out.emplace_back("star_z3", star(z_group(3)));
  out.emplace_back("star_dwb_z2", star(dwb_of_group(z_group(2))));
  // 2-chains
  out.emplace_back("chain_b4_b2_a", two_chain(b4(), b2(), kB4toB2a));
  out.emplace_back("chain_b4_b2_b", two_chain(b4(), b2(), kB4toB2b));
  out.emplace_back("chain_b2_b2", two_chain(b2(), b2(), {0, 1}));
  out.emplace_back("chain_b2_b4", two_chain(b2(), b4(), kB2toB4));
  out.emplace_back("chain_z4_z2", two_chain(z_group(4), z_group(2), {0, 1, 0, 1}));
  out.emplace_back("chain_klein_z2", two_chain(klein_group(), z_group(2), {0, 0, 1, 1}));
  out.emplace_back("chain_z2_z2", two_chain(z_group(2), z_group(2), {0, 1}));
  out.emplace_back("chain_z2_z2_collapse", two_chain(z_group(2), z_group(2), {0, 0}));
  // 3-chains
  {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = kB4toB2a;
    trans[{1, 2}] = {0, 0};
    trans[{0, 2}] = {0, 0, 0, 0};
    out.emplace_back("chain3_b4_b2_triv",
                     make_system(chain_semilattice(3), {b4(), b2(), ti}, std::move(trans)));
  }
  {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = {0, 1, 0, 1};
    trans[{1, 2}] = {0, 0};
    trans[{0, 2}] = {0, 0, 0, 0};
    out.emplace_back("chain3_z4_z2_z1",
                     make_system(chain_semilattice(3), {z_group(4), z_group(2), tg},
                                 std::move(trans)));
  }
  {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    trans[{0, 1}] = {0, 1};
    trans[{1, 2}] = {0, 1};
    trans[{0, 2}] = {0, 1};
    out.emplace_back("chain3_z2_id",
                     make_system(chain_semilattice(3), {z_group(2), z_group(2), z_group(2)},
                                 std::move(trans)));
  }
  // diamonds
  {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}) trans[{i, j}] = {0};
    out.emplace_back("diamond_trivial_groups",
                     make_system(diamond_semilattice(), {tg, tg, tg, tg}, std::move(trans)));
  }
  {
    std::map<std::pair<int, int>, std::vector<int>> trans;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})
      trans[{i, j}] = {0, 1};
    out.emplace_back("diamond_z2_id",
                     make_system(diamond_semilattice(),
                                 {z_group(2), z_group(2), z_group(2), z_group(2)},
                                 std::move(trans)));
    std::map<std::pair<int, int>, std::vector<int>> trans2;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})
      trans2[{i, j}] = {0, 1};
    out.emplace_back("diamond_b2_id",
                     make_system(diamond_semilattice(), {b2(), b2(), b2(), b2()},
                                 std::move(trans2)));
  }
  out.emplace_back("diamond_ibsl_sys", diamond_ibsl_system());
  out.emplace_back("star_dwb_triv", two_chain(dwb_of_group(z_group(2)), tdwb, {0, 0}));
  out.emplace_back("chain_lat", two_chain(
      make_algebra(lattice_signature(), {"2", "3"}, {{0, 1, 1, 1}, {0, 0, 0, 1}}), tl, {0, 0}));
  out.emplace_back("nontransitivity", nontransitivity_system());
  return out;
}

}  // namespace plonka
