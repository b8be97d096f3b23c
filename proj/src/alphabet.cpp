#include "idpda/alphabet.hpp"

#include "idpda/error.hpp"

namespace idpda {

std::string_view to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::neutral: return "neutral";
    case SymbolClass::open: return "open";
    case SymbolClass::close: return "close";
  }
  return "?";
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<SymbolClass> classes)
    : names_(std::move(names)), classes_(std::move(classes)) {
  if (names_.size() != classes_.size())
    throw ValidationError("alphabet: name and class lists differ in length");
  for (Symbol a = 0; a < names_.size(); ++a) {
    if (names_[a].empty()) throw ValidationError("alphabet: empty token name");
    if (!index_.emplace(names_[a], a).second)
      throw ValidationError("alphabet: duplicate token '" + names_[a] + "'");
  }
}

Alphabet Alphabet::from_classes(std::vector<std::string> neutral,
                                std::vector<std::string> open,
                                std::vector<std::string> close) {
  std::vector<std::string> names;
  std::vector<SymbolClass> classes;
  auto add = [&](std::vector<std::string>& group, SymbolClass c) {
    for (auto& name : group) {
      names.push_back(std::move(name));
      classes.push_back(c);
    }
  };
  add(neutral, SymbolClass::neutral);
  add(open, SymbolClass::open);
  add(close, SymbolClass::close);
  return Alphabet(std::move(names), std::move(classes));
}

bool Alphabet::contains(std::string_view name) const {
  return index_.contains(std::string(name));
}

Symbol Alphabet::symbol(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw ValidationError("token '" + std::string(name) + "' is not in the alphabet");
  return it->second;
}

std::vector<Symbol> Alphabet::symbols_of(SymbolClass c) const {
  std::vector<Symbol> out;
  for (Symbol a = 0; a < classes_.size(); ++a)
    if (classes_[a] == c) out.push_back(a);
  return out;
}

InputString encode(const Alphabet& alphabet, std::span<const std::string> tokens) {
  InputString w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(alphabet.symbol(t));
  return w;
}

std::string render(const Alphabet& alphabet, std::span<const Symbol> w,
                   std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += separator;
    out += alphabet.name(w[i]);
  }
  return out;
}

long nesting_depth(std::span<const Symbol> w, const Alphabet& alphabet) {
  long depth = 0;
  for (Symbol a : w) {
    if (a >= alphabet.size())
      throw ValidationError("symbol index " + std::to_string(a) + " is not in the alphabet");
    switch (alphabet.class_of(a)) {
      case SymbolClass::open: ++depth; break;
      case SymbolClass::close:
        if (--depth < 0) return -1;
        break;
      case SymbolClass::neutral: break;
    }
  }
  return depth;
}

bool is_well_nested(std::span<const Symbol> w, const Alphabet& alphabet) {
  return nesting_depth(w, alphabet) == 0;
}

}  // namespace idpda
