#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace idpda {

using Symbol = std::uint32_t;
using State = std::uint32_t;
using StackSymbol = std::uint32_t;

enum class SymbolClass : std::uint8_t { neutral, open, close };

std::string_view to_string(SymbolClass c);

/// A finite input alphabet split into neutral symbols, left brackets and
/// right brackets. Symbols are addressed by their index in declaration order.
class Alphabet {
 public:
  Alphabet() = default;

  /// Throws ValidationError on empty or duplicate names.
  Alphabet(std::vector<std::string> names, std::vector<SymbolClass> classes);

  /// Builds an alphabet from per-class name lists, declared in the order
  /// neutral, open, close.
  static Alphabet from_classes(std::vector<std::string> neutral,
                               std::vector<std::string> open,
                               std::vector<std::string> close);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol a) const { return names_.at(a); }
  SymbolClass class_of(Symbol a) const { return classes_.at(a); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(std::string_view name) const;
  /// Throws ValidationError if the name is not declared.
  Symbol symbol(std::string_view name) const;

  std::vector<Symbol> symbols_of(SymbolClass c) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.classes_ == b.classes_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<SymbolClass> classes_;
  std::unordered_map<std::string, Symbol> index_;
};

using InputString = std::vector<Symbol>;

/// Maps token names onto symbols of `alphabet`; throws ValidationError on an
/// undeclared name.
InputString encode(const Alphabet& alphabet, std::span<const std::string> tokens);

/// Tokens joined by `separator`.
std::string render(const Alphabet& alphabet, std::span<const Symbol> w,
                   std::string_view separator = " ");

/// Equal numbers of left and right brackets, and no prefix with more right
/// brackets than left ones. Bracket names are irrelevant.
bool is_well_nested(std::span<const Symbol> w, const Alphabet& alphabet);

/// Open-minus-close count of `w`, or -1 if some prefix dips below zero.
long nesting_depth(std::span<const Symbol> w, const Alphabet& alphabet);

}  // namespace idpda
