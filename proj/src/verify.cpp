#include "idpda/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "idpda/determinize.hpp"
#include "idpda/error.hpp"
#include "idpda/format.hpp"
#include "idpda/gadget.hpp"
#include "idpda/relation_calculus.hpp"
#include "idpda/witness.hpp"
#include "summary_engine.hpp"

namespace idpda::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::uint64_t v) { return std::to_string(v); }

std::uint64_t pow2(std::uint32_t e) { return std::uint64_t{1} << e; }

// Runs one check, converting resource exhaustion into a budget result and
// stamping the elapsed time.
CheckResult timed(const std::string& id, const std::function<CheckResult()>& body) {
  const auto start = Clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const ResourceError& e) {
    r.status = CheckStatus::budget;
    r.observed = e.what();
  }
  r.id = id;
  r.runtime = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

CheckResult holds(std::string id, bool ok, std::string detail) {
  return make_check(std::move(id), "true", ok ? "true" : "false:" + detail);
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

struct Mismatches {
  std::size_t checked = 0;
  std::size_t count = 0;
  std::string first;

  void record(bool expected, bool got, const std::string& what) {
    ++checked;
    if (expected == got) return;
    if (count++ == 0) first = what;
  }
  CheckResult check(std::string id) const {
    return make_check(std::move(id), "0", count == 0 ? "0" : str(count) + " first=" + first);
  }
};

// Acceptance through both simulation paths; the frontier result is the
// verdict and the relation calculus is the oracle.
class Evaluator {
 public:
  Evaluator(const Nidpda& a, sim::SimOptions options, OracleTally* oracle)
      : a_(a), calc_(a), options_(options), oracle_(oracle) {}

  bool accepts(const gadget::GadgetString& g) {
    const InputString w = g.encode(a_.alphabet);
    const bool frontier = sim::nidpda_accepts(a_, w, options_);
    sim::RelationRunner run(calc_);
    for (Symbol c : w) run.step(c);
    if (oracle_) {
      ++oracle_->evaluated;
      if (frontier != run.accepting() && oracle_->disagreements++ == 0) oracle_->first = g.text("");
    }
    return frontier;
  }

 private:
  const Nidpda& a_;
  RelationCalculus calc_;
  sim::SimOptions options_;
  OracleTally* oracle_;
};

CheckResult no_empty_push(const std::string& id, const DeterminizationResult& det) {
  std::size_t bad = 0;
  for (const auto& [r, a] : det.pushed_label)
    if (r.empty()) ++bad;
  return make_check(id, "0", str(bad));
}

BehaviorRelation random_nonempty(std::mt19937_64& rng, std::uint32_t n) {
  const std::uint64_t total = pow2(n * n);
  return BehaviorRelation::from_mask(n, 1 + pick(rng, total - 1));
}

std::vector<BehaviorRelation> nonempty_relations(std::uint32_t n) {
  auto all = all_relations(n);
  all.erase(all.begin());  // mask 0
  return all;
}

std::string describe(const std::vector<BehaviorRelation>& rs, const std::vector<std::uint64_t>& ls) {
  std::string out = "R=";
  for (std::size_t k = 0; k < rs.size(); ++k) out += (k ? "," : "") + rs[k].bits();
  if (!ls.empty()) {
    out += ";l=";
    for (std::size_t k = 0; k < ls.size(); ++k) out += (k ? "," : "") + str(ls[k]);
  }
  return out;
}

}  // namespace

Profile Profile::desk() { return Profile{}; }

Profile Profile::quick() {
  Profile p;
  p.name = "quick";
  p.n = 2;
  p.s_values = {2};
  p.m_max = 2;
  p.max_len = 8;
  p.max_len_wide = 6;
  p.samples = 50;
  p.tuple_samples = 20;
  return p;
}

void Profile::validate() const {
  if (n < 1 || n > 3) throw ConfigError("profile: n must be in 1..3, got " + str(n));
  if (stack_n < 1 || stack_n > 2) throw ConfigError("profile: stack n must be 1 or 2, got " + str(stack_n));
  if (equiv_n < 1 || equiv_n > 3) throw ConfigError("profile: equivalence n must be in 1..3");
  for (auto s : s_values) {
    if (s < 1 || s > witness::max_brackets(stack_n))
      throw ConfigError("profile: s = " + str(s) + " outside 1.." + str(witness::max_brackets(stack_n)) +
                        " for n = " + str(stack_n));
    if (stack_n == 1 && s != 2)
      throw ConfigError("profile: with one state only s = 2 is supported");
  }
  if (m_max < 1 || m_max > 4) throw ConfigError("profile: m must be in 1..4, got " + str(m_max));
  if (max_len > 16 || max_len_wide > 16) throw ConfigError("profile: max length above 16");
  if (sim.max_configurations == 0) throw ConfigError("profile: configuration cap must be positive");
}

// Acceptance of #·x·w_R·y_j·#·x'·y_i and pairwise distinct states after #·x·w_R.
std::vector<CheckResult> check_state_bound(std::uint32_t n, const Profile& profile, OracleTally* oracle) {
  if (n < 1 || n > 3) throw PreconditionError("state bound check: n must be in 1..3");
  const std::string tag = "A" + str(n);
  std::vector<CheckResult> out;
  const Nidpda a = witness::build_A(n);
  DeterminizationResult det;

  out.push_back(timed(tag + ".reachable_states", [&] {
    det = determinize(a);
    return make_check("", str(pow2(n * n)), str(metrics(det).reachable_states));
  }));
  out.push_back(timed(tag + ".states_upper", [&] {
    const auto states = det.automaton.n_states;
    return holds("", states <= pow2(n * n), str(states));
  }));
  out.push_back(timed(tag + ".no_empty_push", [&] { return no_empty_push("", det); }));

  const auto anchor = gadget::anchors(n);
  const auto hash = gadget::from_tokens({"#"});
  const auto relations = all_relations(n);

  out.push_back(timed(tag + ".distinct_prefixes", [&] {
    std::set<State> seen;
    for (const auto& r : relations) {
      const auto prefix = hash + anchor.push + gadget::w(r);
      seen.insert(sim::didpda_run(det.automaton, prefix.encode(a.alphabet)).state);
    }
    return make_check("", str(relations.size()), str(seen.size()));
  }));

  Mismatches frontier, deterministic;
  auto probe = [&](Evaluator& eval, const BehaviorRelation& r, State i, State j) {
    const auto word = hash + anchor.push + gadget::w(r) + gadget::y(j, n) + hash + anchor.pop + gadget::y(i, n);
    const bool expected = r.member(i, j);
    const std::string what = "R=" + r.bits() + ";i=" + str(i) + ";j=" + str(j);
    frontier.record(expected, eval.accepts(word), what);
    deterministic.record(expected, sim::didpda_accepts(det.automaton, word.encode(a.alphabet)), what);
  };
  out.push_back(timed(tag + ".accept", [&] {
    Evaluator eval(a, profile.sim, oracle);
    if (n <= 2) {
      for (const auto& r : relations)
        for (State i = 0; i < n; ++i)
          for (State j = 0; j < n; ++j) probe(eval, r, i, j);
    } else {
      auto rng = make_rng(profile.seed, 0x200 + n);
      for (std::size_t t = 0; t < profile.samples; ++t) {
        const auto r = BehaviorRelation::from_mask(n, pick(rng, pow2(n * n)));
        const auto i = static_cast<State>(pick(rng, n));
        const auto j = static_cast<State>(pick(rng, n));
        probe(eval, r, i, j);
      }
    }
    return frontier.check("");
  }));
  out.push_back(timed(tag + ".det_accept", [&] { return deterministic.check(""); }));
  return out;
}

// f·g acceptance on B_n, reachable pushed symbols and outcome injectivity.
std::vector<CheckResult> check_stack_bound(std::uint32_t n, std::uint32_t m_max, const Profile& profile,
                                        OracleTally* oracle) {
  if (n < 1 || n > 2) throw PreconditionError("stack bound check: n must be 1 or 2");
  const std::string tag = "B" + str(n);
  std::vector<CheckResult> out;
  const Nidpda b = witness::build_B(n);
  DeterminizationResult det;

  out.push_back(timed(tag + ".reachable_pushed", [&] {
    det = determinize(b);
    return make_check("", str(pow2(n * n) - 1), str(metrics(det).reachable_pushed));
  }));
  out.push_back(timed(tag + ".no_empty_push", [&] { return no_empty_push("", det); }));

  const auto singles = nonempty_relations(n);
  out.push_back(timed(tag + ".injective", [&] {
    std::set<sim::RunResult> outcomes;
    const std::vector<std::uint64_t> zeros{0, 0};
    for (const auto& r : singles)
      outcomes.insert(sim::didpda_run(det.automaton, gadget::f({&r, 1}, zeros, n, 1).encode(b.alphabet)));
    return make_check("", str(singles.size()), str(outcomes.size()));
  }));

  if (n < 2) return out;  // the g gadget needs two states

  // Distinct answers under some g force distinct outcomes: checked pairwise
  // over the m = 1 strings.
  out.push_back(timed(tag + ".certificates", [&] {
    const std::vector<std::uint64_t> zeros{0, 0};
    std::vector<sim::RunResult> outcome;
    for (const auto& r : singles)
      outcome.push_back(sim::didpda_run(det.automaton, gadget::f({&r, 1}, zeros, n, 1).encode(b.alphabet)));
    std::size_t unsound = 0;
    for (std::size_t x = 0; x < singles.size(); ++x)
      for (std::size_t y = x + 1; y < singles.size(); ++y)
        if (singles[x] != singles[y] && outcome[x] == outcome[y]) ++unsound;
    return make_check("", "0", str(unsound));
  }));

  for (std::uint32_t m = 1; m <= m_max; ++m) {
    out.push_back(timed(tag + ".fg.m" + str(m), [&] {
      Evaluator eval(b, profile.sim, oracle);
      Mismatches mm;
      const std::vector<std::uint64_t> zeros(m + 1, 0);
      auto run_tuple = [&](const std::vector<BehaviorRelation>& rs) {
        const auto fs = gadget::f(rs, zeros, n, 1);
        for (std::uint32_t k = 1; k <= m; ++k)
          for (State i = 0; i < n; ++i)
            for (State j = 0; j < n; ++j)
              mm.record(rs[k - 1].member(i, j), eval.accepts(fs + gadget::g(i, j, k, m, n)),
                        describe(rs, {}) + ";i=" + str(i) + ";j=" + str(j) + ";k=" + str(k));
      };
      if (m == 1) {
        for (const auto& r : singles) run_tuple({r});
      } else {
        auto rng = make_rng(profile.seed, 0x300 + m);
        for (std::size_t t = 0; t < profile.tuple_samples; ++t) {
          std::vector<BehaviorRelation> rs;
          for (std::uint32_t k = 0; k < m; ++k) rs.push_back(random_nonempty(rng, n));
          run_tuple(rs);
        }
      }
      return mm.check("");
    }));
  }
  return out;
}

// f·g and f·h acceptance on B_{n,s}, pushed-symbol count and injectivity.
std::vector<CheckResult> check_bracket_bound(std::uint32_t n, std::uint64_t s, std::uint32_t m_max,
                                        const Profile& profile, OracleTally* oracle) {
  if (n != 2) throw PreconditionError("bracket bound check: n must be 2");
  if (s < 2 || s > witness::max_brackets(n))
    throw PreconditionError("bracket bound check: s must be in 2.." + str(witness::max_brackets(n)));
  const std::string tag = "B" + str(n) + "_" + str(s);
  std::vector<CheckResult> out;
  const Nidpda b = witness::build_Bns(n, s);
  DeterminizationResult det;

  out.push_back(timed(tag + ".reachable_pushed", [&] {
    det = determinize(b);
    return make_check("", str(s * (pow2(n * n) - 1)), str(metrics(det).reachable_pushed));
  }));
  out.push_back(timed(tag + ".no_empty_push", [&] { return no_empty_push("", det); }));
  out.push_back(timed(tag + ".alphabet_size", [&] { return make_check("", str(s + 5), str(b.alphabet.size())); }));

  const auto singles = nonempty_relations(n);
  out.push_back(timed(tag + ".injective", [&] {
    std::set<sim::RunResult> outcomes;
    std::size_t strings = 0;
    for (const auto& r : singles)
      for (std::uint64_t l1 = 0; l1 < s; ++l1)
        for (std::uint64_t l2 = 0; l2 < s; ++l2) {
          const std::vector<std::uint64_t> ls{l1, l2};
          outcomes.insert(sim::didpda_run(det.automaton, gadget::f({&r, 1}, ls, n, s).encode(b.alphabet)));
          ++strings;
        }
    return make_check("", str(strings), str(outcomes.size()));
  }));

  std::vector<std::uint32_t> bits;
  for (std::uint32_t x = 0; x <= witness::top_bit(s); ++x)
    if (x / n < n) bits.push_back(x);

  for (std::uint32_t m = 1; m <= m_max; ++m) {
    Mismatches fg, fh;
    auto run_tuple = [&](Evaluator& eval, const std::vector<BehaviorRelation>& rs,
                         const std::vector<std::uint64_t>& ls, bool do_g, bool do_h) {
      const auto fs = gadget::f(rs, ls, n, s);
      const auto what = describe(rs, ls);
      if (do_g)
        for (std::uint32_t k = 1; k <= m; ++k)
          for (State i = 0; i < n; ++i)
            for (State j = 0; j < n; ++j)
              fg.record(rs[k - 1].member(i, j), eval.accepts(fs + gadget::g(i, j, k, m, n, "<0")),
                        what + ";i=" + str(i) + ";j=" + str(j) + ";k=" + str(k));
      if (do_h)
        for (std::uint32_t k = 1; k <= m + 1; ++k)
          for (auto x : bits)
            fh.record((ls[k - 1] >> x) & 1, eval.accepts(fs + gadget::h(k, x, m, n, s)),
                      what + ";x=" + str(x) + ";k=" + str(k));
    };
    auto sweep = [&](bool do_g, bool do_h) {
      Evaluator eval(b, profile.sim, oracle);
      if (m == 1) {
        for (const auto& r : singles)
          for (std::uint64_t l1 = 0; l1 < s; ++l1)
            for (std::uint64_t l2 = 0; l2 < s; ++l2) run_tuple(eval, {r}, {l1, l2}, do_g, do_h);
      } else {
        auto rng = make_rng(profile.seed, (do_g ? 0x400 : 0x500) + 16 * s + m);
        for (std::size_t t = 0; t < profile.tuple_samples; ++t) {
          std::vector<BehaviorRelation> rs;
          std::vector<std::uint64_t> ls;
          for (std::uint32_t k = 0; k < m; ++k) rs.push_back(random_nonempty(rng, n));
          for (std::uint32_t k = 0; k <= m; ++k) ls.push_back(pick(rng, s));
          run_tuple(eval, rs, ls, do_g, do_h);
        }
      }
    };
    out.push_back(timed(tag + ".fg.m" + str(m), [&] {
      sweep(true, false);
      return fg.check("");
    }));
    out.push_back(timed(tag + ".fh.m" + str(m), [&] {
      sweep(false, true);
      return fh.check("");
    }));
  }
  return out;
}

void for_each_well_nested(const Alphabet& alphabet, std::size_t max_len,
                          const std::function<void(const InputString&)>& visit) {
  InputString w;
  std::function<void(std::size_t)> go = [&](std::size_t depth) {
    if (depth == 0) visit(w);
    if (w.size() == max_len) return;
    const std::size_t room = max_len - w.size() - 1;
    for (Symbol c = 0; c < alphabet.size(); ++c) {
      std::size_t next = depth;
      switch (alphabet.class_of(c)) {
        case SymbolClass::neutral: break;
        case SymbolClass::open:
          if (depth + 1 > room) continue;
          next = depth + 1;
          break;
        case SymbolClass::close:
          if (depth == 0) continue;
          next = depth - 1;
          break;
      }
      if (next > room) continue;
      w.push_back(c);
      go(next);
      w.pop_back();
    }
  };
  go(0);
}

BoundedComparison bounded_compare(const Nidpda& a, const Didpda& d, std::size_t max_len, OracleTally* oracle,
                                  sim::SimOptions options) {
  if (!(a.alphabet == d.alphabet)) throw PreconditionError("bounded equivalence: alphabets differ");
  const RelationCalculus calc(a);
  BoundedComparison result;
  std::size_t limit = max_len;  // only strings shorter than a known mismatch matter
  InputString w;

  struct Frame {
    sim::FrontierRunner frontier;
    sim::RelationRunner relation;
    sim::DidpdaRunner det;
  };
  const auto& alphabet = a.alphabet;
  std::function<void(const Frame&)> go = [&](const Frame& fr) {
    const std::size_t depth = fr.det.stack().size();
    if (depth == 0) {
      ++result.strings;
      const bool nondet = fr.frontier.any_accepting();
      if (oracle) {
        ++oracle->evaluated;
        if (nondet != fr.relation.accepting() && oracle->disagreements++ == 0)
          oracle->first = render(alphabet, w, "");
      }
      if (nondet != fr.det.accepting() && (!result.mismatch || w.size() < result.mismatch->size())) {
        result.mismatch = w;
        limit = w.size() == 0 ? 0 : w.size() - 1;
      }
    }
    if (w.size() >= limit) return;
    const std::size_t room = max_len - w.size() - 1;
    for (Symbol c = 0; c < alphabet.size(); ++c) {
      const auto cls = alphabet.class_of(c);
      if (cls == SymbolClass::close && depth == 0) continue;
      const std::size_t next = cls == SymbolClass::open ? depth + 1 : cls == SymbolClass::close ? depth - 1 : depth;
      if (next > room) continue;
      Frame child = fr;
      child.frontier.step(c);
      child.relation.step(c);
      child.det.step(c);
      w.push_back(c);
      go(child);
      w.pop_back();
      if (w.size() >= limit) return;
    }
  };
  go(Frame{sim::FrontierRunner(a, a.initial, options), sim::RelationRunner(calc), sim::DidpdaRunner(d)});
  return result;
}

CheckResult bounded_equivalence(const Nidpda& a, const Didpda& d, std::size_t max_len, OracleTally* oracle,
                                sim::SimOptions options) {
  return timed("bounded_equivalence", [&] {
    const auto r = bounded_compare(a, d, max_len, oracle, options);
    return make_check("", "none", r.mismatch ? "mismatch:" + render(a.alphabet, *r.mismatch, "") : "none");
  });
}

std::optional<InputString> product_inequivalence(const Didpda& d1, const Didpda& d2) {
  if (!(d1.alphabet == d2.alphabet)) throw PreconditionError("product: alphabets differ");
  std::map<std::pair<State, State>, State> state_ids;
  std::vector<std::pair<State, State>> states;
  std::map<std::pair<StackSymbol, StackSymbol>, StackSymbol> symbol_ids;
  std::vector<std::pair<StackSymbol, StackSymbol>> symbols;

  auto state = [&](State p, State q) {
    auto [it, inserted] = state_ids.try_emplace({p, q}, static_cast<State>(states.size()));
    if (inserted) states.emplace_back(p, q);
    return it->second;
  };
  auto symbol = [&](StackSymbol g1, StackSymbol g2) {
    auto [it, inserted] = symbol_ids.try_emplace({g1, g2}, static_cast<StackSymbol>(symbols.size()));
    if (inserted) symbols.emplace_back(g1, g2);
    return it->second;
  };

  detail::StepSystem system;
  system.neutral = [&](State q, Symbol c) {
    const auto [p1, p2] = states[q];
    return state(d1.next_neutral(c, p1), d2.next_neutral(c, p2));
  };
  system.open = [&](State q, Symbol c) {
    const auto [p1, p2] = states[q];
    const Push a = d1.next_open(c, p1);
    const Push b = d2.next_open(c, p2);
    return Push{state(a.state, b.state), symbol(a.symbol, b.symbol)};
  };
  system.close = [&](State q, Symbol c, StackSymbol g) {
    const auto [p1, p2] = states[q];
    const auto [g1, g2] = symbols[g];
    return state(d1.next_close(c, p1, g1), d2.next_close(c, p2, g2));
  };

  detail::SummaryEngine engine(d1.alphabet, system);
  const State initial = state(d1.initial, d2.initial);
  engine.run(initial, [&](State q) {
    const auto [p1, p2] = states[q];
    return d1.accepting[p1] != d2.accepting[p2];
  });
  if (!engine.stopped_at()) return std::nullopt;
  return engine.word(0, *engine.stopped_at());
}

namespace {

// Every bracket pair of the one-state witness has matching type.
bool types_match(const Alphabet& alphabet, const InputString& w) {
  std::vector<std::size_t> open;
  for (Symbol c : w) {
    const auto size = alphabet.name(c).size();
    switch (alphabet.class_of(c)) {
      case SymbolClass::neutral: break;
      case SymbolClass::open: open.push_back(size); break;
      case SymbolClass::close:
        if (open.back() != size) return false;
        open.pop_back();
        break;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> check_one_state(const Profile& profile) {
  std::vector<CheckResult> out;
  const Nidpda b12 = witness::build_B12();
  DeterminizationResult det;
  out.push_back(timed("B1_2.states", [&] {
    det = determinize(b12);
    const auto m = metrics(det);
    return holds("", m.reachable_states >= 2, str(m.reachable_states));
  }));
  out.push_back(timed("B1_2.reachable_pushed", [&] { return make_check("", "2", str(metrics(det).reachable_pushed)); }));
  out.push_back(timed("B1_2.no_empty_push", [&] { return no_empty_push("", det); }));
  out.push_back(timed("B1_2.type_match", [&] {
    Mismatches mm;
    for_each_well_nested(b12.alphabet, 10, [&](const InputString& w) {
      mm.record(types_match(b12.alphabet, w), sim::nidpda_accepts(b12, w, profile.sim), render(b12.alphabet, w, ""));
    });
    return mm.check("");
  }));
  return out;
}

std::vector<CheckResult> check_language_preservation(const std::string& tag, const Nidpda& a, std::size_t max_len,
                                                     const Profile& profile, OracleTally* oracle) {
  std::vector<CheckResult> out;
  DeterminizationResult det;
  out.push_back(timed("equiv." + tag + ".no_empty_push", [&] {
    det = determinize(a);
    return no_empty_push("", det);
  }));
  out.push_back(timed("equiv." + tag + ".len" + str(max_len), [&] {
    const auto r = bounded_compare(a, det.automaton, max_len, oracle, profile.sim);
    return make_check("", "none", r.mismatch ? "mismatch:" + render(a.alphabet, *r.mismatch, "") : "none");
  }));
  out.push_back(timed("equiv." + tag + ".product", [&] {
    const auto cex = product_inequivalence(det.automaton, det.automaton);
    return make_check("", "none", cex ? "counterexample:" + render(a.alphabet, *cex, "") : "none");
  }));
  return out;
}

std::vector<CheckResult> run_suite(const Profile& profile) {
  profile.validate();
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  OracleTally oracle;

  for (std::uint32_t n = 1; n <= profile.n; ++n) append(check_state_bound(n, profile, &oracle));
  append(check_stack_bound(profile.stack_n, profile.m_max, profile, &oracle));
  if (profile.stack_n == 2)
    for (auto s : profile.s_values)
      if (s >= 2)
        append(check_bracket_bound(profile.stack_n, s, std::min<std::uint32_t>(profile.m_max, 2), profile, &oracle));
  append(check_one_state(profile));

  const auto en = profile.equiv_n;
  append(check_language_preservation("A" + str(en), witness::build_A(en), profile.max_len, profile, &oracle));
  append(check_language_preservation("B" + str(en), witness::build_B(en), profile.max_len, profile, &oracle));
  if (en >= 2)
    append(check_language_preservation("B" + str(en) + "_2", witness::build_Bns(en, 2), profile.max_len_wide,
                                       profile, &oracle));
  append(check_language_preservation("B1_2", witness::build_B12(), std::min<std::size_t>(profile.max_len, 10),
                                     profile, &oracle));

  out.push_back(timed("oracle.agreement", [&] {
    return make_check("", "0", oracle.disagreements == 0 ? "0" : str(oracle.disagreements) + " first=" + oracle.first);
  }));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

}  // namespace idpda::verify
