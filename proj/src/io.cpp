#include "plonka/io.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace plonka {

namespace {

Json table_to_nested(const std::vector<int>& table, int n, int arity) {
  if (arity == 0) return table[0];
  // slice the flat row-major table into nested arrays
  std::function<Json(size_t, int)> build = [&](size_t base, int depth) -> Json {
    Json out = Json::array();
    size_t stride = 1;
    for (int i = 1; i < depth; ++i) stride *= static_cast<size_t>(n);
    for (int a = 0; a < n; ++a) {
      if (depth == 1)
        out.push_back(table[base + a]);
      else
        out.push_back(build(base + a * stride, depth - 1));
    }
    return out;
  };
  return build(0, arity);
}

void flatten_table(const Json& j, int arity, std::vector<int>& out) {
  if (arity == 0) {
    if (!j.is_number_integer()) throw ParseError("constant table must be an index");
    out.push_back(j.get<int>());
    return;
  }
  if (!j.is_array()) throw ParseError("table nesting does not match the arity");
  for (const auto& e : j) flatten_table(e, arity - 1, out);
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& a) {
  Json j;
  j["signature"] = Json::array();
  for (const auto& op : a.sig.operations)
    j["signature"].push_back({{"name", op.name}, {"arity", op.arity}});
  j["elements"] = a.labels;
  j["tables"] = Json::object();
  for (size_t i = 0; i < a.sig.operations.size(); ++i)
    j["tables"][a.sig.operations[i].name] =
        table_to_nested(a.tables[i], a.size(), a.sig.operations[i].arity);
  return j;
}

FiniteAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("signature") || !j.contains("elements") || !j.contains("tables"))
    throw ParseError("algebra JSON requires signature/elements/tables");
  Signature sig;
  for (const auto& op : j.at("signature"))
    sig.operations.push_back({op.at("name").get<std::string>(), op.at("arity").get<int>()});
  std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<int>> tables;
  for (const auto& op : sig.operations) {
    if (!j.at("tables").contains(op.name))
      throw ParseError("missing table for operation '" + op.name + "'");
    std::vector<int> flat;
    flatten_table(j.at("tables").at(op.name), op.arity, flat);
    tables.push_back(std::move(flat));
  }
  return make_algebra(std::move(sig), std::move(labels), std::move(tables));
}

Json semilattice_to_json(const JoinSemilattice& s) {
  Json j;
  j["size"] = s.size();
  j["join"] = s.join;
  j["least"] = s.least ? Json(*s.least) : Json(nullptr);
  return j;
}

JoinSemilattice semilattice_from_json(const Json& j) {
  if (!j.contains("size") || !j.contains("join"))
    throw ParseError("semilattice JSON requires size/join");
  auto join = j.at("join").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(join.size()) != j.at("size").get<int>())
    throw ParseError("declared size disagrees with the join table");
  std::optional<int> least;
  if (j.contains("least") && !j.at("least").is_null()) least = j.at("least").get<int>();
  return make_semilattice(std::move(join), least);
}

Json system_to_json(const DirectSystem& d) {
  Json j;
  j["index"] = semilattice_to_json(d.index);
  j["fibers"] = Json::array();
  for (const auto& f : d.fibers) j["fibers"].push_back(algebra_to_json(f));
  j["transitions"] = Json::array();
  for (const auto& [key, map] : d.transitions)
    j["transitions"].push_back({{"from", key.first}, {"to", key.second}, {"map", map}});
  return j;
}

DirectSystem system_from_json(const Json& j) {
  if (!j.contains("index") || !j.contains("fibers") || !j.contains("transitions"))
    throw ParseError("system JSON requires index/fibers/transitions");
  JoinSemilattice index = semilattice_from_json(j.at("index"));
  std::vector<FiniteAlgebra> fibers;
  for (const auto& f : j.at("fibers")) fibers.push_back(algebra_from_json(f));
  std::map<std::pair<int, int>, std::vector<int>> trans;
  for (const auto& t : j.at("transitions"))
    trans[{t.at("from").get<int>(), t.at("to").get<int>()}] =
        t.at("map").get<std::vector<int>>();
  return make_system(std::move(index), std::move(fibers), std::move(trans));
}

Json partition_to_json(const Partition& p) {
  Json j;
  j["blocks"] = p.blocks();
  return j;
}

Partition partition_from_json(const Json& j, int expected_size) {
  if (!j.contains("blocks")) throw ParseError("partition JSON requires blocks");
  auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  int count = 0;
  for (const auto& b : blocks)
    for (int e : b) {
      if (e < 0 || e >= expected_size) throw ParseError("partition element out of range");
      ++count;
    }
  if (count != expected_size) throw ParseError("partition does not cover the carrier");
  return Partition::from_blocks(expected_size, blocks);
}

namespace {

struct TokenStream {
  std::vector<std::string> toks;
  size_t pos = 0;
  const std::string& peek() const {
    static const std::string end = "";
    return pos < toks.size() ? toks[pos] : end;
  }
  std::string next() {
    if (pos >= toks.size()) throw ParseError("unexpected end of term");
    return toks[pos++];
  }
};

TokenStream tokenize(const std::string& text) {
  TokenStream ts;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        ts.toks.push_back(cur);
        cur.clear();
      }
      if (c == '(' || c == ')') ts.toks.push_back(std::string(1, c));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) ts.toks.push_back(cur);
  return ts;
}

Term parse_term_stream(TokenStream& ts) {
  std::string t = ts.next();
  if (t == ")") throw ParseError("unexpected ')'");
  if (t != "(") return Term::var(t);
  std::string op = ts.next();
  if (op == "(" || op == ")") throw ParseError("operation name expected after '('");
  std::vector<Term> args;
  while (ts.peek() != ")") {
    if (ts.peek().empty()) throw ParseError("missing ')'");
    args.push_back(parse_term_stream(ts));
  }
  ts.next();  // consume ')'
  return Term::app(op, std::move(args));
}

}  // namespace

Term parse_term(const std::string& text) {
  TokenStream ts = tokenize(text);
  Term t = parse_term_stream(ts);
  if (ts.pos != ts.toks.size()) throw ParseError("trailing tokens after term");
  return t;
}

std::string term_to_string(const Term& t) {
  if (t.is_var) return t.head;
  std::string out = "(" + t.head;
  for (const auto& a : t.args) out += " " + term_to_string(a);
  return out + ")";
}

Identity parse_identity(const std::string& text) {
  size_t split = text.find('=');
  size_t len = 1;
  size_t approx = text.find("≈");
  if (approx != std::string::npos && (split == std::string::npos || approx < split)) {
    split = approx;
    len = std::string("≈").size();
  }
  if (split == std::string::npos) throw ParseError("identity requires '=' between terms");
  return Identity{parse_term(text.substr(0, split)), parse_term(text.substr(split + len))};
}

namespace {

std::vector<std::pair<int, int>> cover_edges(const JoinSemilattice& s) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (a == b || !s.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < s.size() && cover; ++c)
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace

std::string semilattice_dot(const JoinSemilattice& s, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < s.size(); ++i) {
    std::string l = i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i);
    out << "  n" << i << " [label=\"" << l << "\"];\n";
  }
  for (auto [a, b] : cover_edges(s)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string congruence_lattice_dot(const std::vector<Partition>& cons) {
  std::ostringstream out;
  out << "digraph con {\n  rankdir=BT;\n";
  for (size_t i = 0; i < cons.size(); ++i)
    out << "  n" << i << " [label=\"" << cons[i].num_blocks() << " blocks\"];\n";
  for (size_t a = 0; a < cons.size(); ++a)
    for (size_t b = 0; b < cons.size(); ++b) {
      if (a == b || !cons[a].refines(cons[b])) continue;
      bool cover = true;
      for (size_t c = 0; c < cons.size() && cover; ++c)
        if (c != a && c != b && cons[a].refines(cons[c]) && cons[c].refines(cons[b]))
          cover = false;
      if (cover) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace plonka
