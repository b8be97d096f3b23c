#include "idpda/automaton.hpp"

#include <algorithm>
#include <set>

#include "idpda/error.hpp"

namespace idpda {

namespace {

template <class T>
std::span<const T> lookup(const auto& table, const auto& key) {
  auto it = table.find(key);
  if (it == table.end()) return {};
  return it->second;
}

template <class T>
bool sorted_unique(const std::vector<T>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](const T& a, const T& b) { return !(a < b); }) ==
         v.end();
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class Checker {
 public:
  Checker(const Alphabet& alphabet, std::uint32_t n, std::size_t stack)
      : alphabet_(alphabet), n_(n), stack_(stack) {}

  void state(State q, const std::string& where) {
    if (q >= n_) fail(where + ": state " + std::to_string(q) + " out of range");
  }
  void stack_symbol(StackSymbol g, const std::string& where) {
    if (g >= stack_) fail(where + ": stack symbol #" + std::to_string(g) + " not declared");
  }
  bool symbol(Symbol a, SymbolClass expected, const std::string& where) {
    if (a >= alphabet_.size()) {
      fail(where + ": symbol #" + std::to_string(a) + " not in alphabet");
      return false;
    }
    if (alphabet_.class_of(a) != expected) {
      fail(where + ": '" + alphabet_.name(a) + "' is " +
           std::string(to_string(alphabet_.class_of(a))) + ", expected " +
           std::string(to_string(expected)));
      return false;
    }
    return true;
  }
  std::string sym(Symbol a) const {
    return a < alphabet_.size() ? alphabet_.name(a) : "#" + std::to_string(a);
  }
  void fail(std::string msg) { report.problems.push_back(std::move(msg)); }

  ValidationReport report;

 private:
  const Alphabet& alphabet_;
  std::uint32_t n_;
  std::size_t stack_;
};

void check_stack_names(Checker& c, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty()) c.fail("stack: empty stack symbol name");
    else if (!seen.insert(s).second) c.fail("stack: duplicate stack symbol '" + s + "'");
  }
}

}  // namespace

std::span<const State> Nidpda::next_neutral(Symbol a, State q) const {
  return lookup<State>(neutral, std::pair{a, q});
}

std::span<const Push> Nidpda::next_open(Symbol a, State q) const {
  return lookup<Push>(open, std::pair{a, q});
}

std::span<const State> Nidpda::next_close(Symbol b, State q, StackSymbol g) const {
  return lookup<State>(close, std::tuple{b, q, g});
}

bool Nidpda::is_initial(State q) const {
  return std::binary_search(initial.begin(), initial.end(), q);
}

bool Nidpda::is_accepting(State q) const {
  return std::binary_search(accepting.begin(), accepting.end(), q);
}

StackSymbol Nidpda::stack_symbol(std::string_view name) const {
  auto it = std::find(stack_symbols.begin(), stack_symbols.end(), name);
  if (it == stack_symbols.end())
    throw ValidationError("stack symbol '" + std::string(name) + "' is not declared");
  return static_cast<StackSymbol>(it - stack_symbols.begin());
}

void Nidpda::normalize() {
  sort_unique(initial);
  sort_unique(accepting);
  auto prune = [](auto& table) {
    for (auto it = table.begin(); it != table.end();) {
      sort_unique(it->second);
      it = it->second.empty() ? table.erase(it) : std::next(it);
    }
  };
  prune(neutral);
  prune(open);
  prune(close);
}

Didpda Didpda::with_shape(Alphabet alphabet, std::uint32_t n_states,
                          std::vector<std::string> stack_symbols) {
  Didpda d;
  d.n_states = n_states;
  d.stack_symbols = std::move(stack_symbols);
  d.accepting.assign(n_states, false);
  d.neutral.resize(alphabet.size());
  d.open.resize(alphabet.size());
  d.close.resize(alphabet.size());
  for (Symbol a = 0; a < alphabet.size(); ++a) {
    switch (alphabet.class_of(a)) {
      case SymbolClass::neutral: d.neutral[a].assign(n_states, 0); break;
      case SymbolClass::open: d.open[a].assign(n_states, Push{}); break;
      case SymbolClass::close:
        d.close[a].assign(std::size_t{n_states} * d.stack_symbols.size(), 0);
        break;
    }
  }
  d.alphabet = std::move(alphabet);
  return d;
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& p : problems) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

ValidationReport validate(const Nidpda& a) {
  Checker c(a.alphabet, a.n_states, a.stack_symbols.size());
  check_stack_names(c, a.stack_symbols);
  for (State q : a.initial) c.state(q, "initial");
  for (State q : a.accepting) c.state(q, "accepting");
  if (!sorted_unique(a.initial)) c.fail("initial: states not sorted and unique");
  if (!sorted_unique(a.accepting)) c.fail("accepting: states not sorted and unique");

  for (const auto& [key, targets] : a.neutral) {
    const auto& [sym, q] = key;
    const std::string where = "t0 " + c.sym(sym) + " " + std::to_string(q);
    c.symbol(sym, SymbolClass::neutral, where);
    c.state(q, where);
    for (State t : targets) c.state(t, where);
    if (!sorted_unique(targets)) c.fail(where + ": targets not sorted and unique");
  }
  for (const auto& [key, targets] : a.open) {
    const auto& [sym, q] = key;
    const std::string where = "t+ " + c.sym(sym) + " " + std::to_string(q);
    c.symbol(sym, SymbolClass::open, where);
    c.state(q, where);
    for (const Push& p : targets) {
      c.state(p.state, where);
      c.stack_symbol(p.symbol, where);
    }
    if (!sorted_unique(targets)) c.fail(where + ": targets not sorted and unique");
  }
  for (const auto& [key, targets] : a.close) {
    const auto& [sym, q, g] = key;
    const std::string where = "t- " + c.sym(sym) + " " + std::to_string(q);
    c.symbol(sym, SymbolClass::close, where);
    c.state(q, where);
    c.stack_symbol(g, where);
    for (State t : targets) c.state(t, where);
    if (!sorted_unique(targets)) c.fail(where + ": targets not sorted and unique");
  }
  return c.report;
}

ValidationReport validate_deterministic(const Nidpda& a) {
  auto report = validate(a);
  if (!report.ok()) return report;
  Checker c(a.alphabet, a.n_states, a.stack_symbols.size());
  if (a.initial.size() != 1)
    c.fail("initial: deterministic automaton needs exactly one initial state, has " +
           std::to_string(a.initial.size()));
  for (Symbol s = 0; s < a.alphabet.size(); ++s) {
    for (State q = 0; q < a.n_states; ++q) {
      const std::string where = c.sym(s) + " " + std::to_string(q);
      switch (a.alphabet.class_of(s)) {
        case SymbolClass::neutral:
          if (auto n = a.next_neutral(s, q).size(); n != 1)
            c.fail("t0 " + where + ": " + std::to_string(n) + " outcomes, expected 1");
          break;
        case SymbolClass::open:
          if (auto n = a.next_open(s, q).size(); n != 1)
            c.fail("t+ " + where + ": " + std::to_string(n) + " outcomes, expected 1");
          break;
        case SymbolClass::close:
          for (StackSymbol g = 0; g < a.stack_symbols.size(); ++g)
            if (auto n = a.next_close(s, q, g).size(); n != 1)
              c.fail("t- " + where + " " + a.stack_symbols[g] + ": " + std::to_string(n) +
                     " outcomes, expected 1");
          break;
      }
    }
  }
  return c.report;
}

ValidationReport validate(const Didpda& d) {
  Checker c(d.alphabet, d.n_states, d.stack_symbols.size());
  check_stack_names(c, d.stack_symbols);
  c.state(d.initial, "initial");
  if (d.accepting.size() != d.n_states) c.fail("accepting: table size differs from state count");
  const auto k = d.alphabet.size();
  if (d.neutral.size() != k || d.open.size() != k || d.close.size() != k) {
    c.fail("transition tables do not cover the alphabet");
    return c.report;
  }
  const auto stack = d.stack_symbols.size();
  for (Symbol s = 0; s < k; ++s) {
    const auto cls = d.alphabet.class_of(s);
    const std::string where = c.sym(s);
    const std::size_t want_neutral = cls == SymbolClass::neutral ? d.n_states : 0;
    const std::size_t want_open = cls == SymbolClass::open ? d.n_states : 0;
    const std::size_t want_close = cls == SymbolClass::close ? d.n_states * stack : 0;
    if (d.neutral[s].size() != want_neutral) c.fail("t0 " + where + ": incomplete table");
    if (d.open[s].size() != want_open) c.fail("t+ " + where + ": incomplete table");
    if (d.close[s].size() != want_close) c.fail("t- " + where + ": incomplete table");
    for (State t : d.neutral[s]) c.state(t, "t0 " + where);
    for (const Push& p : d.open[s]) {
      c.state(p.state, "t+ " + where);
      c.stack_symbol(p.symbol, "t+ " + where);
    }
    for (State t : d.close[s]) c.state(t, "t- " + where);
  }
  return c.report;
}

void require_valid(const Nidpda& a) {
  if (auto r = validate(a); !r.ok()) throw ValidationError(r.summary());
}

void require_valid(const Didpda& d) {
  if (auto r = validate(d); !r.ok()) throw ValidationError(r.summary());
}

Nidpda widen(const Didpda& d) {
  Nidpda a;
  a.alphabet = d.alphabet;
  a.n_states = d.n_states;
  a.stack_symbols = d.stack_symbols;
  a.initial = {d.initial};
  for (State q = 0; q < d.n_states; ++q)
    if (d.accepting[q]) a.accepting.push_back(q);
  for (Symbol s = 0; s < d.alphabet.size(); ++s) {
    for (State q = 0; q < d.neutral[s].size(); ++q) a.neutral[{s, q}] = {d.neutral[s][q]};
    for (State q = 0; q < d.open[s].size(); ++q) a.open[{s, q}] = {d.open[s][q]};
    const auto stack = d.stack_symbols.size();
    for (std::size_t k = 0; k < d.close[s].size(); ++k)
      a.close[{s, static_cast<State>(k / stack), static_cast<StackSymbol>(k % stack)}] = {
          d.close[s][k]};
  }
  return a;
}

Didpda to_didpda(const Nidpda& a) {
  if (auto r = validate_deterministic(a); !r.ok()) throw ValidationError(r.summary());
  Didpda d = Didpda::with_shape(a.alphabet, a.n_states, a.stack_symbols);
  d.initial = a.initial.front();
  for (State q : a.accepting) d.accepting[q] = true;
  for (const auto& [key, t] : a.neutral) d.neutral[key.first][key.second] = t.front();
  for (const auto& [key, t] : a.open) d.open[key.first][key.second] = t.front();
  const auto stack = a.stack_symbols.size();
  for (const auto& [key, t] : a.close) {
    const auto& [s, q, g] = key;
    d.close[s][std::size_t{q} * stack + g] = t.front();
  }
  return d;
}

}  // namespace idpda
