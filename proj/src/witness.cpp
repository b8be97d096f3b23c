#include "idpda/witness.hpp"

#include <bit>
#include <string>

#include "idpda/error.hpp"

namespace idpda::witness {

namespace {

std::vector<State> all_states(std::uint32_t n) {
  std::vector<State> q(n);
  for (State i = 0; i < n; ++i) q[i] = i;
  return q;
}

void require_states(std::uint32_t n) {
  if (n == 0) throw PreconditionError("witness: n must be at least 1");
}

// Transitions shared by A_n and B_n on '-', '#' and '>', and the A_n part
// of '<', written against whatever alphabet `a` already carries.
void add_base_transitions(Nidpda& a, Symbol open) {
  const auto n = a.n_states;
  const Symbol dash = a.alphabet.symbol("-");
  const Symbol hash = a.alphabet.symbol("#");
  const Symbol close = a.alphabet.symbol(">");
  const StackSymbol zero = a.stack_symbol("0");
  const StackSymbol one = a.stack_symbol("1");
  for (State i = 0; i < n; ++i) {
    a.neutral[{hash, i}] = all_states(n);
    a.neutral[{dash, i}] = {(i + n - 1) % n};
    a.open[{open, i}] = {Push{i, i == 0 ? zero : one}};
    for (StackSymbol g : {zero, one})
      if (i != 0 || g != zero) a.close[{close, i, g}] = {i};
  }
}

// B_n's alternatives at a left bracket: (j, h{i}) and (j, r{j}) for all j.
void add_guess_pushes(Nidpda& a, Symbol open) {
  const auto n = a.n_states;
  for (State i = 0; i < n; ++i) {
    auto& out = a.open[{open, i}];
    for (State j = 0; j < n; ++j) {
      out.push_back(Push{j, a.stack_symbol("h" + std::to_string(i))});
      out.push_back(Push{j, a.stack_symbol("r" + std::to_string(j))});
    }
  }
}

void add_double_pops(Nidpda& a) {
  const auto n = a.n_states;
  const Symbol dbl = a.alphabet.symbol(">>");
  for (State i = 0; i < n; ++i) {
    a.close[{dbl, 0, a.stack_symbol("h" + std::to_string(i))}] = {i};
    if (n > 1) a.close[{dbl, 1, a.stack_symbol("r" + std::to_string(i))}] = {i};
  }
}

std::vector<std::string> b_stack(std::uint32_t n) {
  std::vector<std::string> g{"0", "1"};
  for (State i = 0; i < n; ++i) g.push_back("h" + std::to_string(i));
  for (State i = 0; i < n; ++i) g.push_back("r" + std::to_string(i));
  return g;
}

}  // namespace

std::uint64_t max_brackets(std::uint32_t n) {
  const std::uint64_t bits = std::uint64_t{n} * n;
  return bits >= 64 ? UINT64_MAX : std::uint64_t{1} << bits;
}

std::uint32_t top_bit(std::uint64_t s) {
  if (s < 2) throw PreconditionError("top_bit: needs s >= 2");
  return static_cast<std::uint32_t>(std::bit_width(s - 1)) - 1;
}

Nidpda build_A(std::uint32_t n) {
  require_states(n);
  Nidpda a;
  a.alphabet = Alphabet::from_classes({"-", "#"}, {"<"}, {">"});
  a.n_states = n;
  a.stack_symbols = {"0", "1"};
  a.initial = {0};
  a.accepting = all_states(n);
  add_base_transitions(a, a.alphabet.symbol("<"));
  return a;
}

Nidpda build_B(std::uint32_t n) {
  require_states(n);
  Nidpda a;
  a.alphabet = Alphabet::from_classes({"-", "#"}, {"<"}, {">", ">>"});
  a.n_states = n;
  a.stack_symbols = b_stack(n);
  a.initial = {0};
  a.accepting = all_states(n);
  const Symbol open = a.alphabet.symbol("<");
  add_base_transitions(a, open);
  add_guess_pushes(a, open);
  add_double_pops(a);
  a.normalize();
  return a;
}

Nidpda build_Bns(std::uint32_t n, std::uint64_t s) {
  require_states(n);
  if (s == 0 || s > max_brackets(n))
    throw PreconditionError("witness: need 1 <= s <= 2^(n^2), got n=" + std::to_string(n) +
                            " s=" + std::to_string(s));
  if (s == 1) return build_B(n);
  if (n == 1) return build_B12();  // s == 2 is the only remaining case

  const auto bits = top_bit(s);
  std::vector<std::string> opens;
  for (std::uint64_t l = 0; l < s; ++l) opens.push_back("<" + std::to_string(l));

  Nidpda a;
  a.alphabet = Alphabet::from_classes({"-", "#"}, opens, {">", ">>", ">>>"});
  a.n_states = n;
  a.stack_symbols = b_stack(n);
  for (std::uint32_t x = 0; x <= bits; ++x) a.stack_symbols.push_back("c" + std::to_string(x));
  a.initial = {0};
  a.accepting = all_states(n);

  for (std::uint64_t l = 0; l < s; ++l) {
    const Symbol open = a.alphabet.symbol(opens[l]);
    add_base_transitions(a, open);
    add_guess_pushes(a, open);
    for (State q = 0; q < n; ++q) {
      auto& out = a.open[{open, q}];
      for (std::uint32_t x = 0; x <= bits; ++x)
        if ((l >> x) & 1)
          for (State r = 0; r < n; ++r) out.push_back(Push{r, a.stack_symbol("c" + std::to_string(x))});
    }
  }
  add_double_pops(a);
  const Symbol triple = a.alphabet.symbol(">>>");
  for (std::uint32_t x = 0; x <= bits; ++x)
    a.close[{triple, x % n, a.stack_symbol("c" + std::to_string(x))}] = {x / n};
  a.normalize();
  return a;
}

Nidpda build_B12() {
  Nidpda a;
  a.alphabet = Alphabet::from_classes({}, {"<", "<<"}, {">", ">>"});
  a.n_states = 1;
  a.stack_symbols = {"0", "1"};
  a.initial = {0};
  a.accepting = {0};
  a.open[{a.alphabet.symbol("<"), 0}] = {Push{0, 0}};
  a.open[{a.alphabet.symbol("<<"), 0}] = {Push{0, 1}};
  a.close[{a.alphabet.symbol(">"), 0, 0}] = {0};
  a.close[{a.alphabet.symbol(">>"), 0, 1}] = {0};
  return a;
}

}  // namespace idpda::witness
