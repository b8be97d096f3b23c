#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idpda {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An automaton, alphabet or string violates a structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// A caller-supplied argument is outside the operation's domain
/// (ill-nested input, index out of range, mismatched relation sizes).
struct PreconditionError : Error {
  using Error::Error;
};

struct LexError : Error {
  LexError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// Simulation exceeded its configured configuration budget.
struct ResourceError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace idpda
