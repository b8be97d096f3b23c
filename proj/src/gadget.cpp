#include "idpda/gadget.hpp"

#include "idpda/error.hpp"
#include "idpda/witness.hpp"

namespace idpda::gadget {

namespace {

std::string params(std::initializer_list<std::uint64_t> values) {
  std::string out = "(";
  for (auto v : values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + ")";
}

void repeat(GadgetString& out, const GadgetString& part, std::uint64_t times) {
  for (std::uint64_t t = 0; t < times; ++t) out += part;
}

void require_state(std::uint32_t i, std::uint32_t n, const char* what) {
  if (i >= n)
    throw PreconditionError(std::string(what) + ": index " + std::to_string(i) + " not below n=" +
                            std::to_string(n));
}

// Pairs missing from r in lexicographic order.
std::vector<std::pair<State, State>> excluded_pairs(const BehaviorRelation& r) {
  std::vector<std::pair<State, State>> out;
  for (State i = 0; i < r.n(); ++i)
    for (State j = 0; j < r.n(); ++j)
      if (!r.member(i, j)) out.emplace_back(i, j);
  return out;
}

Anchors split_w(const BehaviorRelation& r, std::string_view open) {
  const auto pairs = excluded_pairs(r);
  Anchors out;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) out.push += u(it->first, r.n(), open);
  for (const auto& [i, j] : pairs) out.pop += v(j, r.n());
  return out;
}

}  // namespace

InputString GadgetString::encode(const Alphabet& alphabet) const {
  return idpda::encode(alphabet, tokens);
}

std::string GadgetString::text(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += separator;
    out += tokens[i];
  }
  return out;
}

GadgetString& GadgetString::operator+=(const GadgetString& rhs) {
  tokens.insert(tokens.end(), rhs.tokens.begin(), rhs.tokens.end());
  if (provenance.empty())
    provenance = rhs.provenance;
  else if (!rhs.provenance.empty())
    provenance += "." + rhs.provenance;
  return *this;
}

GadgetString from_tokens(std::initializer_list<std::string_view> toks) {
  GadgetString out;
  for (auto t : toks) out.tokens.emplace_back(t);
  return out;
}

GadgetString u(std::uint32_t i, std::uint32_t n, std::string_view open) {
  require_state(i, n, "u");
  GadgetString out;
  out.tokens.assign(i, "-");
  out.tokens.emplace_back(open);
  out.tokens.insert(out.tokens.end(), n - i, "-");
  out.provenance = "u" + params({i, n});
  return out;
}

GadgetString v(std::uint32_t j, std::uint32_t n) {
  require_state(j, n, "v");
  GadgetString out;
  out.tokens.assign(j, "-");
  out.tokens.emplace_back(">");
  out.tokens.insert(out.tokens.end(), n - j, "-");
  out.provenance = "v" + params({j, n});
  return out;
}

GadgetString w(const BehaviorRelation& r, std::string_view open) {
  auto parts = split_w(r, open);
  GadgetString out;
  out.tokens = std::move(parts.push.tokens);
  out.tokens.emplace_back("#");
  out.tokens.insert(out.tokens.end(), parts.pop.tokens.begin(), parts.pop.tokens.end());
  out.provenance = "w[" + r.bits() + "]";
  return out;
}

GadgetString y(std::uint32_t i, std::uint32_t n, std::string_view open) {
  require_state(i, n, "y");
  BehaviorRelation r(n);
  r.insert(i, i);
  auto out = w(r, open);
  out.provenance = "y" + params({i, n});
  return out;
}

GadgetString y_explicit(std::uint32_t i, std::uint32_t n, std::string_view open) {
  require_state(i, n, "y_explicit");
  GadgetString block;
  block.tokens = {std::string(open), ">", "-"};
  GadgetString out;
  repeat(out, block, i);
  out.tokens.emplace_back("-");
  repeat(out, block, n - i);
  out.provenance = "y_explicit" + params({i, n});
  return out;
}

Anchors anchors(std::uint32_t n, std::string_view open) {
  if (n == 0) throw PreconditionError("anchors: n must be at least 1");
  auto out = split_w(BehaviorRelation::diagonal(n), open);
  out.push.provenance = "x" + params({n});
  out.pop.provenance = "x'" + params({n});
  return out;
}

GadgetString f(std::span<const BehaviorRelation> relations, std::span<const std::uint64_t> indices,
               std::uint32_t n, std::uint64_t s) {
  if (s == 0) throw PreconditionError("f: s must be at least 1");
  if (indices.size() != relations.size() + 1)
    throw PreconditionError("f: needs exactly one more bracket index than relations");
  const std::string inner_open = s == 1 ? "<" : "<0";
  auto bracket = [&](std::uint64_t l) {
    if (l >= s) throw PreconditionError("f: bracket index " + std::to_string(l) + " not below s");
    return s == 1 ? std::string("<") : "<" + std::to_string(l);
  };
  GadgetString out;
  for (std::size_t t = 0; t < relations.size(); ++t) {
    if (relations[t].n() != n) throw PreconditionError("f: relation over the wrong number of states");
    if (relations[t].empty()) throw PreconditionError("f: relations must be non-empty");
    out.tokens.push_back(bracket(indices[t]));
    const auto part = w(relations[t], inner_open);
    out.tokens.insert(out.tokens.end(), part.tokens.begin(), part.tokens.end());
  }
  out.tokens.push_back(bracket(indices.back()));
  out.provenance = "f[";
  for (std::size_t t = 0; t < relations.size(); ++t) out.provenance += relations[t].bits() + ",";
  for (std::size_t t = 0; t < indices.size(); ++t)
    out.provenance += std::to_string(indices[t]) + (t + 1 < indices.size() ? "," : "");
  out.provenance += "]";
  return out;
}

GadgetString g(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t m, std::uint32_t n,
               std::string_view open) {
  if (n < 2) throw PreconditionError("g: needs n >= 2");
  if (k < 1 || k > m) throw PreconditionError("g: needs 1 <= k <= m");
  require_state(i, n, "g");
  require_state(j, n, "g");
  const auto hash_pop = from_tokens({"#", ">>"});
  const auto dbl = from_tokens({">>"});
  const auto hash = from_tokens({"#"});
  GadgetString out;
  repeat(out, hash_pop, m - k);
  out += hash + y(0, n, open) + dbl + y(j, n, open) + hash + y(1, n, open) + dbl + y(i, n, open);
  repeat(out, hash_pop, k - 1);
  out.provenance = "g" + params({i, j, k, m, n});
  return out;
}

GadgetString h(std::uint32_t k, std::uint32_t x, std::uint32_t m, std::uint32_t n, std::uint64_t s) {
  if (n == 0) throw PreconditionError("h: n must be at least 1");
  if (s < 2) throw PreconditionError("h: needs s >= 2");
  if (k < 1 || k > m + 1) throw PreconditionError("h: needs 1 <= k <= m+1");
  if (x > witness::top_bit(s)) throw PreconditionError("h: bit index beyond floor(log2(s-1))");
  if (x / n >= n) throw PreconditionError("h: bit index does not fit two states");
  const auto hash_pop = from_tokens({"#", ">>"});
  GadgetString out;
  repeat(out, hash_pop, m - k + 1);
  out += from_tokens({"#"}) + y(x % n, n, "<0") + from_tokens({">>>"}) + y(x / n, n, "<0");
  repeat(out, hash_pop, k - 1);
  out.provenance = "h" + params({k, x, m, n, s});
  return out;
}

long bracket_balance(const GadgetString& s) {
  long balance = 0;
  for (const auto& t : s.tokens) {
    if (t.starts_with('<')) ++balance;
    else if (t.starts_with('>')) --balance;
  }
  return balance;
}

}  // namespace idpda::gadget
