#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idpda/determinize.hpp"
#include "idpda/error.hpp"
#include "idpda/format.hpp"
#include "idpda/gadget.hpp"
#include "idpda/sim.hpp"
#include "idpda/verify.hpp"
#include "idpda/witness.hpp"

namespace py = pybind11;
using namespace idpda;

namespace {

InputString input(const Alphabet& alphabet, const py::object& w) {
  if (py::isinstance<py::str>(w)) return format::tokenize(w.cast<std::string>(), alphabet);
  return encode(alphabet, w.cast<std::vector<std::string>>());
}

std::vector<std::string> tokens(const Alphabet& alphabet, const InputString& w) {
  std::vector<std::string> out;
  for (Symbol c : w) out.push_back(alphabet.name(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Input-driven pushdown automata: witnesses, determinization and checks";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<LexError>(m, "LexError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<ResourceError>(m, "ResourceError", error);
  py::register_exception<ConfigError>(m, "ConfigError", error);

  py::class_<BehaviorRelation>(m, "BehaviorRelation")
      .def(py::init<std::uint32_t>(), py::arg("n"))
      .def_static("full", &BehaviorRelation::full)
      .def_static("diagonal", &BehaviorRelation::diagonal)
      .def_static("from_bits", &BehaviorRelation::from_bits, py::arg("n"), py::arg("bits"))
      .def_property_readonly("n", &BehaviorRelation::n)
      .def("member", &BehaviorRelation::member)
      .def("bits", &BehaviorRelation::bits)
      .def("pairs", [](const BehaviorRelation& r) {
        std::vector<std::pair<State, State>> out;
        for (State i = 0; i < r.n(); ++i)
          for (State j = 0; j < r.n(); ++j)
            if (r.member(i, j)) out.emplace_back(i, j);
        return out;
      })
      .def("__len__", &BehaviorRelation::count)
      .def("__eq__", [](const BehaviorRelation& a, const BehaviorRelation& b) { return a == b; })
      .def("__hash__", &BehaviorRelation::hash)
      .def("__repr__", &BehaviorRelation::to_string);
  m.def("compose", &compose);
  m.def("remove", [](const BehaviorRelation& r, State i, State j) { return idpda::remove(r, i, j); },
        py::arg("r"), py::arg("i"), py::arg("j"));

  py::class_<Nidpda>(m, "Nidpda")
      .def_readonly("n_states", &Nidpda::n_states)
      .def_readonly("stack_symbols", &Nidpda::stack_symbols)
      .def_readonly("initial", &Nidpda::initial)
      .def_readonly("accepting", &Nidpda::accepting)
      .def_property_readonly("alphabet", [](const Nidpda& a) { return a.alphabet.names(); })
      .def("serialize", [](const Nidpda& a) { return format::serialize_automaton(a); })
      .def("__eq__", [](const Nidpda& a, const Nidpda& b) { return a == b; });

  py::class_<Didpda>(m, "Didpda")
      .def_readonly("n_states", &Didpda::n_states)
      .def_readonly("stack_symbols", &Didpda::stack_symbols)
      .def_readonly("initial", &Didpda::initial)
      .def_property_readonly("alphabet", [](const Didpda& d) { return d.alphabet.names(); })
      .def("serialize", [](const Didpda& d) { return format::serialize_automaton(d); });

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("states", &Metrics::states)
      .def_readonly("stack_symbols", &Metrics::stack_symbols)
      .def_readonly("reachable_states", &Metrics::reachable_states)
      .def_readonly("reachable_pushed", &Metrics::reachable_pushed);

  py::class_<DeterminizationResult>(m, "DeterminizationResult")
      .def_readonly("automaton", &DeterminizationResult::automaton)
      .def_readonly("state_label", &DeterminizationResult::state_label)
      .def("metrics", &metrics);

  m.def("build_A", &witness::build_A, py::arg("n"));
  m.def("build_B", &witness::build_B, py::arg("n"));
  m.def("build_Bns", &witness::build_Bns, py::arg("n"), py::arg("s"));
  m.def("build_B12", &witness::build_B12);

  m.def("parse_automaton", [](const std::string& text) { return format::parse_automaton(text); });
  m.def("parse_didpda", [](const std::string& text) { return format::parse_didpda(text); });
  m.def("tokenize", [](const Nidpda& a, const std::string& text) {
    return tokens(a.alphabet, format::tokenize(text, a.alphabet));
  });

  m.def("determinize", &determinize, py::arg("a"));
  m.def("nidpda_accepts", [](const Nidpda& a, const py::object& w) { return sim::nidpda_accepts(a, input(a.alphabet, w)); });
  m.def("relation_accepts", [](const Nidpda& a, const py::object& w) { return sim::relation_accepts(a, input(a.alphabet, w)); });
  m.def("behavior_relation",
        [](const Nidpda& a, const py::object& w) { return sim::behavior_relation(a, input(a.alphabet, w)); });
  m.def("didpda_accepts", [](const Didpda& d, const py::object& w) { return sim::didpda_accepts(d, input(d.alphabet, w)); });
  m.def("didpda_run", [](const Didpda& d, const py::object& w) {
    const auto r = sim::didpda_run(d, input(d.alphabet, w));
    return py::make_tuple(r.state, r.stack);
  });
  m.def("trace", [](const Nidpda& a, const py::object& w) {
    std::vector<std::string> out;
    for (const auto& line : sim::nidpda_trace(a, input(a.alphabet, w))) out.push_back(sim::render_trace_line(line));
    return out;
  });

  auto g = m.def_submodule("gadget", "Special strings, returned as token lists");
  g.def("u", [](std::uint32_t i, std::uint32_t n, const std::string& open) { return gadget::u(i, n, open).tokens; },
        py::arg("i"), py::arg("n"), py::arg("open") = "<");
  g.def("v", [](std::uint32_t j, std::uint32_t n) { return gadget::v(j, n).tokens; }, py::arg("j"), py::arg("n"));
  g.def("w", [](const BehaviorRelation& r, const std::string& open) { return gadget::w(r, open).tokens; },
        py::arg("r"), py::arg("open") = "<");
  g.def("y", [](std::uint32_t i, std::uint32_t n, const std::string& open) { return gadget::y(i, n, open).tokens; },
        py::arg("i"), py::arg("n"), py::arg("open") = "<");
  g.def("y_explicit",
        [](std::uint32_t i, std::uint32_t n, const std::string& open) { return gadget::y_explicit(i, n, open).tokens; },
        py::arg("i"), py::arg("n"), py::arg("open") = "<");
  g.def("anchors", [](std::uint32_t n, const std::string& open) {
    const auto a = gadget::anchors(n, open);
    return py::make_tuple(a.push.tokens, a.pop.tokens);
  }, py::arg("n"), py::arg("open") = "<");
  g.def("f", [](const std::vector<BehaviorRelation>& rs, const std::vector<std::uint64_t>& ls, std::uint32_t n,
                std::uint64_t s) { return gadget::f(rs, ls, n, s).tokens; },
        py::arg("relations"), py::arg("indices"), py::arg("n"), py::arg("s") = 1);
  g.def("g", [](std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t mm, std::uint32_t n,
                const std::string& open) { return gadget::g(i, j, k, mm, n, open).tokens; },
        py::arg("i"), py::arg("j"), py::arg("k"), py::arg("m"), py::arg("n"), py::arg("open") = "<");
  g.def("h", [](std::uint32_t k, std::uint32_t x, std::uint32_t mm, std::uint32_t n, std::uint64_t s) {
    return gadget::h(k, x, mm, n, s).tokens;
  }, py::arg("k"), py::arg("x"), py::arg("m"), py::arg("n"), py::arg("s"));

  m.def("product_inequivalence", [](const Didpda& a, const Didpda& b) -> std::optional<std::vector<std::string>> {
    const auto cex = verify::product_inequivalence(a, b);
    if (!cex) return std::nullopt;
    return tokens(a.alphabet, *cex);
  });

  m.def("run_suite", [](const std::string& profile, std::optional<std::uint32_t> n, std::optional<std::size_t> max_len,
                        std::uint64_t seed) {
    auto p = profile == "quick" ? verify::Profile::quick() : verify::Profile::desk();
    if (profile != "quick" && profile != "desk") throw ConfigError("unknown profile " + profile);
    if (n) {
      p.n = *n;
      p.equiv_n = *n;
      p.stack_n = std::min<std::uint32_t>(*n, 2);
    }
    if (max_len) {
      p.max_len = *max_len;
      p.max_len_wide = std::min<std::size_t>(*max_len, 10);
    }
    p.seed = seed;
    const auto results = verify::run_suite(p);
    return py::make_tuple(verify::all_passed(results), format::render_report(results));
  }, py::arg("profile") = "quick", py::arg("n") = py::none(), py::arg("max_len") = py::none(), py::arg("seed") = 0);
}
