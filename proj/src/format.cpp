#include "idpda/format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "idpda/error.hpp"

namespace idpda {

CheckResult make_check(std::string id, std::string expected, std::string observed) {
  CheckResult r;
  r.id = std::move(id);
  r.status = expected == observed ? CheckStatus::pass : CheckStatus::fail;
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  return r;
}

namespace format {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

State parse_state(std::string_view s, std::size_t line) {
  State q = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), q);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a state number, got '" + std::string(s) + "'", line);
  return q;
}

struct RawTransition {
  std::size_t line;
  std::string kind;
  std::vector<std::string> lhs;  // token, state[, stack symbol]
  std::string rhs;
};

std::vector<std::pair<std::string, std::string>> parse_pushes(std::string_view s, std::size_t line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && is_space(s[i])) ++i;
  };
  for (skip(); i < s.size(); skip()) {
    if (s[i] != '(') throw ParseError("expected '(' in push list", line);
    const auto comma = s.find(',', i);
    const auto close = s.find(')', i);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
      throw ParseError("malformed push pair, expected (state,symbol)", line);
    out.emplace_back(std::string(trim(s.substr(i + 1, comma - i - 1))),
                     std::string(trim(s.substr(comma + 1, close - comma - 1))));
    if (out.back().second.empty()) throw ParseError("empty stack symbol in push pair", line);
    i = close + 1;
  }
  return out;
}

std::string sanitize(std::string v) {
  for (char& c : v)
    if (is_space(c)) c = '_';
  return v.empty() ? "-" : v;
}

}  // namespace

InputString tokenize(std::string_view text, const Alphabet& alphabet) {
  InputString out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t best_len = 0;
    Symbol best = 0;
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      const auto& name = alphabet.name(a);
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best_len = name.size();
        best = a;
      }
    }
    if (best_len == 0)
      throw LexError("unrecognized input '" + std::string(text.substr(i, 1)) + "'", i);
    out.push_back(best);
    i += best_len;
  }
  return out;
}

Nidpda parse_automaton(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool saw_version = false;
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> headers;
  std::vector<RawTransition> transitions;

  static const char* kHeaders[] = {"alphabet neutral", "alphabet open", "alphabet close", "states",
                                   "initial", "accepting", "stack"};

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.starts_with("#!")) continue;
    if (!saw_version) {
      if (line != kVersionLine)
        throw ParseError("expected '" + std::string(kVersionLine) + "' as the first line", line_no);
      saw_version = true;
      continue;
    }
    if (line.starts_with("t0 ") || line.starts_with("t+ ") || line.starts_with("t- ")) {
      const auto arrow = line.find("->");
      if (arrow == std::string_view::npos) throw ParseError("transition without '->'", line_no);
      RawTransition t{line_no, std::string(line.substr(0, 2)), split_ws(line.substr(3, arrow - 3)),
                      std::string(line.substr(arrow + 2))};
      const std::size_t want = t.kind == "t-" ? 3 : 2;
      if (t.lhs.size() != want)
        throw ParseError(t.kind + " expects " + std::to_string(want) + " fields before '->'", line_no);
      transitions.push_back(std::move(t));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("unrecognized line '" + std::string(line) + "'", line_no);
    std::string key;
    for (const auto& w : split_ws(line.substr(0, colon))) key += (key.empty() ? "" : " ") + w;
    bool known = false;
    for (const char* h : kHeaders) known |= key == h;
    if (!known) throw ParseError("unknown header '" + key + "'", line_no);
    if (!headers.emplace(key, std::pair{line_no, split_ws(line.substr(colon + 1))}).second)
      throw ParseError("duplicate header '" + key + "'", line_no);
  }
  if (!saw_version) throw ParseError("empty document", line_no);
  for (const char* h : kHeaders)
    if (!headers.contains(h)) throw ParseError(std::string("missing '") + h + ":' line", line_no);

  Nidpda a;
  a.alphabet = Alphabet::from_classes(headers["alphabet neutral"].second, headers["alphabet open"].second,
                                      headers["alphabet close"].second);
  {
    const auto& [ln, fields] = headers["states"];
    if (fields.size() != 1) throw ParseError("'states:' takes one number", ln);
    a.n_states = parse_state(fields[0], ln);
  }
  for (const auto& q : headers["initial"].second) a.initial.push_back(parse_state(q, headers["initial"].first));
  for (const auto& q : headers["accepting"].second)
    a.accepting.push_back(parse_state(q, headers["accepting"].first));
  a.stack_symbols = headers["stack"].second;

  auto token = [&](const RawTransition& t) {
    if (!a.alphabet.contains(t.lhs[0]))
      throw ValidationError("line " + std::to_string(t.line) + ": token '" + t.lhs[0] +
                            "' is not declared");
    return a.alphabet.symbol(t.lhs[0]);
  };
  auto stack_symbol = [&](const std::string& name, std::size_t line) {
    for (StackSymbol g = 0; g < a.stack_symbols.size(); ++g)
      if (a.stack_symbols[g] == name) return g;
    throw ValidationError("line " + std::to_string(line) + ": stack symbol '" + name +
                          "' is not declared");
  };

  for (const auto& t : transitions) {
    const Symbol sym = token(t);
    const State q = parse_state(t.lhs[1], t.line);
    if (t.kind == "t0") {
      auto& out = a.neutral[{sym, q}];
      for (const auto& f : split_ws(t.rhs)) out.push_back(parse_state(f, t.line));
    } else if (t.kind == "t+") {
      auto& out = a.open[{sym, q}];
      for (const auto& [qs, gs] : parse_pushes(t.rhs, t.line))
        out.push_back(Push{parse_state(qs, t.line), stack_symbol(gs, t.line)});
    } else {
      auto& out = a.close[{sym, q, stack_symbol(t.lhs[2], t.line)}];
      for (const auto& f : split_ws(t.rhs)) out.push_back(parse_state(f, t.line));
    }
  }
  a.normalize();
  require_valid(a);
  return a;
}

Didpda parse_didpda(std::string_view text) { return to_didpda(parse_automaton(text)); }

std::string serialize_automaton(const Nidpda& a) {
  std::ostringstream out;
  auto list = [&](const auto& items) {
    for (const auto& x : items) out << ' ' << x;
    out << '\n';
  };
  out << kVersionLine << '\n';
  for (auto c : {SymbolClass::neutral, SymbolClass::open, SymbolClass::close}) {
    out << "alphabet " << to_string(c) << ':';
    std::vector<std::string> names;
    for (Symbol s : a.alphabet.symbols_of(c)) names.push_back(a.alphabet.name(s));
    list(names);
  }
  out << "states: " << a.n_states << '\n';
  out << "initial:";
  list(a.initial);
  out << "accepting:";
  list(a.accepting);
  out << "stack:";
  list(a.stack_symbols);

  for (Symbol s = 0; s < a.alphabet.size(); ++s) {
    const auto& tok = a.alphabet.name(s);
    for (auto it = a.neutral.lower_bound({s, 0}); it != a.neutral.end() && it->first.first == s; ++it) {
      out << "t0 " << tok << ' ' << it->first.second << " ->";
      list(it->second);
    }
    for (auto it = a.open.lower_bound({s, 0}); it != a.open.end() && it->first.first == s; ++it) {
      out << "t+ " << tok << ' ' << it->first.second << " ->";
      for (const Push& p : it->second) out << " (" << p.state << ',' << a.stack_symbols[p.symbol] << ')';
      out << '\n';
    }
    for (auto it = a.close.lower_bound({s, 0, 0}); it != a.close.end() && std::get<0>(it->first) == s;
         ++it) {
      out << "t- " << tok << ' ' << std::get<1>(it->first) << ' '
          << a.stack_symbols[std::get<2>(it->first)] << " ->";
      list(it->second);
    }
  }
  return out.str();
}

std::string serialize_automaton(const Didpda& d) { return serialize_automaton(widen(d)); }

std::string render_check(const CheckResult& r) {
  switch (r.status) {
    case CheckStatus::pass: return "CHECK " + r.id + " PASS";
    case CheckStatus::fail:
      return "CHECK " + r.id + " FAIL expected=" + sanitize(r.expected) + " got=" + sanitize(r.observed);
    case CheckStatus::budget: return "CHECK " + r.id + " BUDGET " + sanitize(r.observed);
  }
  return {};
}

std::string render_report(std::span<const CheckResult> results) {
  std::string out = std::string(kVersionLine) + "\n";
  std::size_t failed = 0;
  for (const auto& r : results) {
    out += render_check(r) + "\n";
    failed += !r.passed();
  }
  if (failed == 0)
    out += "ALL PASS\n";
  else
    out += "FAILED " + std::to_string(failed) + " OF " + std::to_string(results.size()) + "\n";
  return out;
}

std::vector<CheckResult> parse_report(std::string_view text) {
  std::vector<CheckResult> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto fields = split_ws(raw);
    if (fields.empty() || fields[0] != "CHECK") continue;
    if (fields.size() < 3) throw ParseError("truncated CHECK line", line_no);
    CheckResult r;
    r.id = fields[1];
    if (fields[2] == "PASS") {
      r.status = CheckStatus::pass;
    } else if (fields[2] == "FAIL") {
      r.status = CheckStatus::fail;
      if (fields.size() != 5 || !fields[3].starts_with("expected=") || !fields[4].starts_with("got="))
        throw ParseError("FAIL line needs expected= and got=", line_no);
      r.expected = fields[3].substr(9);
      r.observed = fields[4].substr(4);
    } else if (fields[2] == "BUDGET") {
      r.status = CheckStatus::budget;
      if (fields.size() > 3) r.observed = fields[3];
    } else {
      throw ParseError("unknown status '" + fields[2] + "'", line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace format
}  // namespace idpda
