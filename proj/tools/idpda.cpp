// idpda: command-line front end.
//
//   idpda witness A|B|Bns|B12 --n N [--s S] [--out PATH]
//   idpda gadget u|v|w|y|y-explicit|anchors|f|g|h ...
//   idpda determinize --automaton PATH [--out PATH]
//   idpda run --automaton PATH --input STR [--trace]
//   idpda equiv --automaton PATH --automaton PATH
//   idpda verify [--profile desk|quick] [--n N] [--s S] [--m M] [--max-len L] [--seed K]
//
// Exit status: 0 on success (accept/reject both count), 1 when `equiv` finds
// the automata inequivalent or `verify` has a failing check, 2 on errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "idpda/determinize.hpp"
#include "idpda/error.hpp"
#include "idpda/format.hpp"
#include "idpda/gadget.hpp"
#include "idpda/sim.hpp"
#include "idpda/verify.hpp"
#include "idpda/witness.hpp"

namespace {

using namespace idpda;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + out_path);
  out << text;
}

Didpda as_deterministic(const Nidpda& a) {
  if (validate_deterministic(a).ok()) return to_didpda(a);
  return determinize(a).automaton;
}

struct Options {
  std::string family;
  std::string kind;
  std::uint32_t n = 2;
  std::uint64_t s = 1;
  std::uint32_t m = 1;
  std::uint32_t i = 0, j = 0, k = 1, x = 0;
  std::vector<std::string> relations;
  std::vector<std::uint64_t> indices;
  std::vector<std::string> automata;
  std::string input;
  std::string out;
  bool trace = false;
  std::string profile = "desk";
  std::optional<std::uint32_t> verify_n, verify_m;
  std::optional<std::uint64_t> verify_s, seed;
  std::optional<std::size_t> max_len;
};

int cmd_witness(const Options& o) {
  Nidpda a;
  if (o.family == "A") a = witness::build_A(o.n);
  else if (o.family == "B") a = witness::build_B(o.n);
  else if (o.family == "Bns") a = witness::build_Bns(o.n, o.s);
  else a = witness::build_B12();
  emit(format::serialize_automaton(a), o.out);
  return 0;
}

int cmd_gadget(const Options& o) {
  const bool numbered = o.s >= 2;
  const std::string_view open = numbered ? "<0" : gadget::kPlainOpen;
  gadget::GadgetString g;
  auto relation = [&](std::size_t at) {
    if (at >= o.relations.size()) throw ConfigError("gadget " + o.kind + ": --relation required");
    return BehaviorRelation::from_bits(o.n, o.relations[at]);
  };
  if (o.kind == "u") g = gadget::u(o.i, o.n, open);
  else if (o.kind == "v") g = gadget::v(o.j, o.n);
  else if (o.kind == "w") g = gadget::w(relation(0), open);
  else if (o.kind == "y") g = gadget::y(o.i, o.n, open);
  else if (o.kind == "y-explicit") g = gadget::y_explicit(o.i, o.n, open);
  else if (o.kind == "anchors") {
    const auto a = gadget::anchors(o.n, open);
    std::cout << a.push.text() << "\n" << a.pop.text() << "\n";
    return 0;
  } else if (o.kind == "f") {
    std::vector<BehaviorRelation> rs;
    for (std::size_t t = 0; t < o.relations.size(); ++t) rs.push_back(relation(t));
    std::vector<std::uint64_t> ls = o.indices;
    if (ls.empty()) ls.assign(rs.size() + 1, 0);
    g = gadget::f(rs, ls, o.n, o.s);
  } else if (o.kind == "g") g = gadget::g(o.i, o.j, o.k, o.m, o.n, open);
  else g = gadget::h(o.k, o.x, o.m, o.n, o.s);
  emit(g.text() + "\n", o.out);
  return 0;
}

int cmd_determinize(const Options& o) {
  const Nidpda a = format::parse_automaton(read_file(o.automata.at(0)));
  const auto det = determinize(a);
  const auto m = metrics(det);
  std::ostringstream metric_lines;
  metric_lines << "#! metric states " << m.states << "\n"
               << "#! metric stack_symbols " << m.stack_symbols << "\n"
               << "#! metric reachable_states " << m.reachable_states << "\n"
               << "#! metric reachable_pushed " << m.reachable_pushed << "\n";
  if (o.out.empty()) {
    std::cout << format::serialize_automaton(det.automaton) << metric_lines.str();
  } else {
    emit(format::serialize_automaton(det.automaton), o.out);
    std::cout << metric_lines.str();
  }
  return 0;
}

int cmd_run(const Options& o) {
  const Nidpda a = format::parse_automaton(read_file(o.automata.at(0)));
  const InputString w = format::tokenize(o.input, a.alphabet);
  if (o.trace)
    for (const auto& line : sim::nidpda_trace(a, w)) std::cout << sim::render_trace_line(line) << "\n";
  std::cout << (sim::nidpda_accepts(a, w) ? "accept" : "reject") << "\n";
  return 0;
}

int cmd_equiv(const Options& o) {
  if (o.automata.size() != 2) throw ConfigError("equiv: exactly two --automaton options required");
  const Nidpda a = format::parse_automaton(read_file(o.automata[0]));
  const Nidpda b = format::parse_automaton(read_file(o.automata[1]));
  const auto cex = verify::product_inequivalence(as_deterministic(a), as_deterministic(b));
  if (!cex) {
    std::cout << "equivalent\n";
    return 0;
  }
  std::cout << "inequivalent " << render(a.alphabet, *cex) << "\n";
  return 1;
}

int cmd_verify(const Options& o) {
  verify::Profile p;
  if (o.profile == "desk") p = verify::Profile::desk();
  else p = verify::Profile::quick();
  if (o.verify_n) {
    p.n = *o.verify_n;
    p.equiv_n = *o.verify_n;
    p.stack_n = std::min<std::uint32_t>(*o.verify_n, 2);
  }
  if (o.verify_s) {
    p.s_values.clear();
    for (std::uint64_t s = 2; s <= *o.verify_s; ++s) p.s_values.push_back(s);
    if (*o.verify_s < 2) p.s_values.push_back(*o.verify_s);
  }
  if (o.verify_m) p.m_max = *o.verify_m;
  if (o.max_len) {
    p.max_len = *o.max_len;
    p.max_len_wide = std::min<std::size_t>(*o.max_len, 10);
  }
  if (o.seed) p.seed = *o.seed;
  const auto results = verify::run_suite(p);
  emit(format::render_report(results), o.out);
  return verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Input-driven pushdown automata: determinization, witness families and checks"};
  app.require_subcommand(1);
  Options o;

  auto* witness_cmd = app.add_subcommand("witness", "Emit a witness automaton document");
  witness_cmd->add_option("family", o.family, "A, B, Bns or B12")->required()->check(CLI::IsMember({"A", "B", "Bns", "B12"}));
  witness_cmd->add_option("--n", o.n, "State count")->check(CLI::Range(1u, 8u));
  witness_cmd->add_option("--s", o.s, "Left-bracket count (Bns)")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--out", o.out, "Output path");

  auto* gadget_cmd = app.add_subcommand("gadget", "Emit a gadget string");
  gadget_cmd->add_option("kind", o.kind, "u, v, w, y, y-explicit, anchors, f, g or h")
      ->required()
      ->check(CLI::IsMember({"u", "v", "w", "y", "y-explicit", "anchors", "f", "g", "h"}));
  gadget_cmd->add_option("--n", o.n, "State count")->check(CLI::Range(1u, 8u));
  gadget_cmd->add_option("--s", o.s, "Left-bracket count; >= 2 selects numbered brackets");
  gadget_cmd->add_option("--m", o.m, "Relation count");
  gadget_cmd->add_option("--i", o.i);
  gadget_cmd->add_option("--j", o.j);
  gadget_cmd->add_option("--k", o.k);
  gadget_cmd->add_option("--x", o.x, "Bit index (h)");
  gadget_cmd->add_option("--relation", o.relations, "Row-major bit string, repeatable");
  gadget_cmd->add_option("--index", o.indices, "Bracket index, repeatable (f)");
  gadget_cmd->add_option("--out", o.out, "Output path");

  auto* det_cmd = app.add_subcommand("determinize", "Determinize an automaton and print metrics");
  det_cmd->add_option("--automaton", o.automata, "Input document")->required()->expected(1);
  det_cmd->add_option("--out", o.out, "Output path for the deterministic automaton");

  auto* run_cmd = app.add_subcommand("run", "Run an automaton on a string");
  run_cmd->add_option("--automaton", o.automata, "Input document")->required()->expected(1);
  run_cmd->add_option("--input", o.input, "Input tokens")->required();
  run_cmd->add_flag("--trace", o.trace, "Print one line per symbol");

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence of two automata");
  equiv_cmd->add_option("--automaton", o.automata, "Input document (give twice)")->required()->expected(2);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--profile", o.profile)->check(CLI::IsMember({"desk", "quick"}));
  verify_cmd->add_option("--n", o.verify_n, "Largest state count");
  verify_cmd->add_option("--s", o.verify_s, "Largest bracket count");
  verify_cmd->add_option("--m", o.verify_m, "Largest relation count");
  verify_cmd->add_option("--max-len", o.max_len, "Bounded-equivalence length");
  verify_cmd->add_option("--seed", o.seed, "Sampling seed");
  verify_cmd->add_option("--out", o.out, "Report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*witness_cmd) return cmd_witness(o);
    if (*gadget_cmd) return cmd_gadget(o);
    if (*det_cmd) return cmd_determinize(o);
    if (*run_cmd) return cmd_run(o);
    if (*equiv_cmd) return cmd_equiv(o);
    return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
