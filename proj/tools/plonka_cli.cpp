#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plonka/congruence.hpp"
#include "plonka/free.hpp"
#include "plonka/io.hpp"
#include "plonka/varieties.hpp"

using namespace plonka;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(std::string("JSON parse failure in ") + path + ": " + e.what());
  }
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text, int n) {
  // "a,b;c,d" with element indices
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    size_t comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("pair '" + item + "' lacks a comma");
    int a = std::stoi(item.substr(0, comma));
    int b = std::stoi(item.substr(comma + 1));
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("pair element out of range");
    out.emplace_back(a, b);
  }
  return out;
}

PartitionFunction load_pf(const FiniteAlgebra& alg, const std::string& spec) {
  if (!spec.empty() && spec[0] == '(') {
    Term t = parse_term(spec);
    for (const auto& v : term_vars(t))
      if (v != "x" && v != "y")
        throw ParseError("partition-function term must use variables x and y");
    PartitionFunction pf{alg, std::vector<std::vector<int>>(
                                  alg.size(), std::vector<int>(alg.size()))};
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b)
        pf.table[a][b] = eval_term(alg, t, {{"x", a}, {"y", b}});
    return pf;
  }
  Json j = read_json(spec);
  if (!j.contains("table")) throw ParseError("partition-function file requires a table field");
  return PartitionFunction{alg, j.at("table").get<std::vector<std::vector<int>>>()};
}

std::string partition_text(const Partition& p, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& b : p.blocks()) {
    out += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += labels[b[i]];
    }
    out += "} ";
  }
  return out;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Płonka-sum workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the machine report instead of text");

  std::string file, pf_spec, pairs, theta1, theta2, suite_name, id_text, variety = "boolean",
              emit_name, blocks_file, order_file, out_file;
  int generators = 2, least_block = 0;
  bool with_witness = false, list_catalog = false, regular_only = false;

  auto* v_validate = app.add_subcommand("validate", "validate an algebra/semilattice/system file");
  v_validate->add_option("file", file)->required();

  auto* v_compose = app.add_subcommand("compose", "compose a direct system");
  v_compose->add_option("file", file)->required();

  auto* v_decompose = app.add_subcommand("decompose", "decompose an algebra along ⊙");
  v_decompose->add_option("file", file)->required();
  v_decompose->add_option("--pf", pf_spec, "binary term like '(mul x (inv y))' or a table file")
      ->required();

  auto* v_checkpf = app.add_subcommand("check-pf", "check the PF1–PF6 axioms");
  v_checkpf->add_option("file", file)->required();
  v_checkpf->add_option("--pf", pf_spec)->required();

  auto* v_checksos = app.add_subcommand("check-sos", "check the semilattice-of-subalgebras laws");
  v_checksos->add_option("file", file)->required();
  v_checksos->add_option("--blocks", blocks_file)->required();
  v_checksos->add_option("--order", order_file)->required();
  v_checksos->add_option("--least", least_block);

  auto* v_congr = app.add_subcommand("congruences", "congruence lattices and their bijection");
  v_congr->add_option("file", file)->required();

  auto* v_cg = app.add_subcommand("cg", "generated congruence via the system route");
  v_cg->add_option("file", file)->required();
  v_cg->add_option("--pairs", pairs)->required();

  auto* v_quot = app.add_subcommand("quotient", "quotient system by a generated congruence");
  v_quot->add_option("file", file)->required();
  v_quot->add_option("--pairs", pairs)->required();

  auto* v_factor = app.add_subcommand("factor", "factor-pair analysis of two congruences");
  v_factor->add_option("file", file)->required();
  v_factor->add_option("--theta1", theta1)->required();
  v_factor->add_option("--theta2", theta2)->required();

  auto* v_si = app.add_subcommand("si", "monolith / subdirect irreducibility");
  v_si->add_option("file", file)->required();

  auto* v_starsi = app.add_subcommand("star-si", "the A* subdirect-irreducibility dichotomy");
  v_starsi->add_option("file", file)->required();

  auto* v_free = app.add_subcommand("free", "free algebra over the regularization");
  v_free->add_option("--variety", variety);
  v_free->add_option("--generators", generators);
  v_free->add_option("--emit", out_file, "write the system JSON here");

  auto* v_suite = app.add_subcommand("check-suite", "run an axiom suite on an algebra");
  v_suite->add_option("file", file)->required();
  v_suite->add_option("--suite", suite_name)->required();
  v_suite->add_flag("--with-witness", with_witness);

  auto* v_checkid = app.add_subcommand("check-id", "parse/classify an identity");
  v_checkid->add_flag("--regular", regular_only, "report regularity only");
  v_checkid->add_option("identity", id_text)->required();
  v_checkid->add_option("--on", file, "also evaluate on this algebra file");

  auto* v_catalog = app.add_subcommand("catalog", "built-in algebras and systems");
  v_catalog->add_flag("--list", list_catalog);
  v_catalog->add_option("--emit", emit_name);

  auto* v_dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  v_dot->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  return guarded([&]() -> int {
    if (v_validate->parsed()) {
      Json j = read_json(file);
      std::vector<Diagnostic> ds;
      std::string kind;
      if (j.contains("fibers")) {
        kind = "system";
        try {
          system_from_json(j);
        } catch (const ValidationError& e) {
          std::cout << e.what() << "\n";
          return 2;
        }
      } else if (j.contains("signature")) {
        kind = "algebra";
        algebra_from_json(j);
      } else if (j.contains("join")) {
        kind = "semilattice";
        semilattice_from_json(j);
      } else {
        throw ParseError("unrecognized schema");
      }
      std::cout << "valid " << kind << "\n";
      return 0;
    }
    if (v_compose->parsed()) {
      PlonkaSum ps = compose(system_from_json(read_json(file)));
      if (as_json) {
        Json j;
        j["algebra"] = algebra_to_json(ps.algebra);
        j["system"] = system_to_json(ps.origin);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "composed sum: " << ps.algebra.size() << " elements over "
                  << ps.origin.index.size() << " indices\n";
        for (int g = 0; g < ps.algebra.size(); ++g)
          std::cout << "  " << ps.algebra.labels[g] << " in fiber " << ps.locate[g].first
                    << "\n";
      }
      return 0;
    }
    if (v_decompose->parsed() || v_checkpf->parsed()) {
      FiniteAlgebra alg = algebra_from_json(read_json(file));
      PartitionFunction pf = load_pf(alg, pf_spec);
      auto ds = check_partition_function(pf);
      if (v_checkpf->parsed()) {
        if (ds.empty()) {
          std::cout << "PF1–PF6 hold\n";
          return 0;
        }
        std::cout << diag_text(ds);
        return 2;
      }
      PlonkaSum ps = decompose(alg, pf);
      if (as_json)
        std::cout << system_to_json(ps.origin).dump(2) << "\n";
      else
        std::cout << "decomposed into " << ps.origin.index.size() << " fibers\n";
      return 0;
    }
    if (v_checksos->parsed()) {
      FiniteAlgebra alg = algebra_from_json(read_json(file));
      Partition blocks = partition_from_json(read_json(blocks_file), alg.size());
      JoinSemilattice order = semilattice_from_json(read_json(order_file));
      bool ok = check_semilattice_of_subalgebras(alg, blocks, order, least_block);
      std::cout << (ok ? "semilattice of subalgebras\n" : "conditions fail\n");
      return ok ? 0 : 2;
    }
    if (v_congr->parsed()) {
      DirectSystem d = system_from_json(read_json(file));
      PlonkaSum ps = compose(d);
      auto cons = all_congruences(ps.algebra);
      auto sys_cons = all_system_congruences(d);
      std::cout << "Con(sum): " << cons.size() << "   system congruences: " << sys_cons.size()
                << "\n";
      for (size_t i = 0; i < cons.size(); ++i) {
        auto sc = to_system_congruence(ps, cons[i]);
        std::cout << "  θ" << i << "  " << partition_text(cons[i], ps.algebra.labels) << " <-> C="
                  << sc.index_con.num_blocks() << " blocks\n";
      }
      return cons.size() == sys_cons.size() ? 0 : 2;
    }
    if (v_cg->parsed() || v_quot->parsed()) {
      DirectSystem d = system_from_json(read_json(file));
      PlonkaSum ps = compose(d);
      auto R = parse_pairs(pairs, ps.algebra.size());
      Partition th = cg_plonka(ps, R);
      if (v_cg->parsed()) {
        if (as_json)
          std::cout << partition_to_json(th).dump(2) << "\n";
        else
          std::cout << "cg: " << partition_text(th, ps.algebra.labels) << "\n";
        return th == cg(ps.algebra, R) ? 0 : 2;
      }
      DirectSystem q = quotient_plonka(ps, th);
      if (as_json)
        std::cout << system_to_json(q).dump(2) << "\n";
      else
        std::cout << "quotient over " << q.index.size() << " indices, "
                  << compose(q).algebra.size() << " elements\n";
      return 0;
    }
    if (v_factor->parsed()) {
      DirectSystem d = system_from_json(read_json(file));
      PlonkaSum ps = compose(d);
      Partition t1 = partition_from_json(read_json(theta1), ps.algebra.size());
      Partition t2 = partition_from_json(read_json(theta2), ps.algebra.size());
      if (!is_congruence(ps.algebra, t1) || !is_congruence(ps.algebra, t2))
        throw ValidationError("inputs are not congruences of the composed sum");
      std::cout << "factor pair: " << (is_factor_pair(ps.algebra, t1, t2) ? "yes" : "no")
                << "\npermutable: " << (permutable(t1, t2) ? "yes" : "no")
                << "\ntheorem biconditional: "
                << (check_factor_theorem(ps, t1, t2) ? "holds" : "VIOLATED") << "\n";
      return check_factor_theorem(ps, t1, t2) ? 0 : 2;
    }
    if (v_si->parsed()) {
      FiniteAlgebra alg = algebra_from_json(read_json(file));
      auto m = monolith(alg);
      if (m)
        std::cout << "subdirectly irreducible; monolith: "
                  << partition_text(*m, alg.labels) << "\n";
      else
        std::cout << "not subdirectly irreducible\n";
      return 0;
    }
    if (v_starsi->parsed()) {
      FiniteAlgebra alg = algebra_from_json(read_json(file));
      auto r = si_readings(alg);
      std::cout << "SI(star): " << (r.star_si ? "yes" : "no")
                << "\nSI(base) ∧ no absorbing: " << (r.rhs_strict ? "yes" : "no")
                << "\n(SI(base) ∨ trivial) ∧ no absorbing: "
                << (r.rhs_trivial_ok ? "yes" : "no")
                << "\ndichotomy (trivial-admitting reading): "
                << (check_si_theorem(alg) ? "holds" : "VIOLATED") << "\n";
      return check_si_theorem(alg) ? 0 : 2;
    }
    if (v_free->parsed()) {
      if (variety != "boolean") throw ParseError("only the boolean provider is built in");
      FreeReport rep = free_plonka(generators, boolean_free_provider());
      std::cout << "free(" << generators << "): predicted " << rep.predicted_size
                << ", actual " << rep.actual_size << "\n";
      for (const auto& [name, g] : rep.generator_locations)
        std::cout << "  " << name << " at global " << g << "\n";
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << system_to_json(rep.system).dump(2) << "\n";
      }
      return rep.predicted_size == rep.actual_size ? 0 : 2;
    }
    if (v_suite->parsed()) {
      FiniteAlgebra alg = algebra_from_json(read_json(file));
      for (const auto& s : builtin_suites())
        if (s.name == suite_name) {
          auto rep = check_suite(alg, s, with_witness);
          for (const auto& [n, ok] : rep.results)
            std::cout << "  " << n << " " << (ok ? "pass" : "FAIL") << "\n";
          if (rep.witness_passed)
            std::cout << "  witness " << (*rep.witness_passed ? "pass" : "fails") << "\n";
          return rep.all_passed ? 0 : 2;
        }
      throw ParseError("unknown suite '" + suite_name + "'");
    }
    if (v_checkid->parsed()) {
      Identity id = parse_identity(id_text);
      std::cout << "regular: " << (is_regular(id) ? "true" : "false") << "\n";
      if (!regular_only && !file.empty()) {
        FiniteAlgebra alg = algebra_from_json(read_json(file));
        std::cout << "satisfied: " << (satisfies_identity(alg, id) ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (v_catalog->parsed()) {
      if (list_catalog || emit_name.empty()) {
        std::cout << "algebras:\n";
        for (const auto& [n, a] : catalog_algebras())
          std::cout << "  " << n << " (" << a.size() << ")\n";
        std::cout << "systems:\n";
        for (const auto& [n, d] : catalog_systems()) {
          int total = 0;
          for (const auto& f : d.fibers) total += f.size();
          std::cout << "  " << n << " (" << total << ")\n";
        }
        return 0;
      }
      for (const auto& [n, a] : catalog_algebras())
        if (n == emit_name) {
          std::cout << algebra_to_json(a).dump(2) << "\n";
          return 0;
        }
      for (const auto& [n, d] : catalog_systems())
        if (n == emit_name) {
          std::cout << system_to_json(d).dump(2) << "\n";
          return 0;
        }
      throw ParseError("no catalog entry named '" + emit_name + "'");
    }
    if (v_dot->parsed()) {
      Json j = read_json(file);
      if (j.contains("join")) {
        std::cout << semilattice_dot(semilattice_from_json(j));
      } else if (j.contains("fibers")) {
        std::cout << semilattice_dot(system_from_json(j).index);
      } else {
        FiniteAlgebra alg = algebra_from_json(j);
        std::cout << congruence_lattice_dot(all_congruences(alg));
      }
      return 0;
    }
    return 0;
  });
}
