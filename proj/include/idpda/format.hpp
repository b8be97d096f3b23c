#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idpda/alphabet.hpp"
#include "idpda/automaton.hpp"
#include "idpda/report.hpp"

namespace idpda::format {

inline constexpr std::string_view kVersionLine = "idpda-format 1";

/// Longest-match tokenization over the alphabet's token names. Whitespace
/// between tokens is ignored. Throws LexError with the byte offset of the
/// first unrecognized character.
InputString tokenize(std::string_view text, const Alphabet& alphabet);

/// Parses an automaton document. Syntax problems raise ParseError with a line
/// number; undeclared names and out-of-range references raise ValidationError.
Nidpda parse_automaton(std::string_view text);
/// parse_automaton followed by the determinism and completeness check.
Didpda parse_didpda(std::string_view text);

std::string serialize_automaton(const Nidpda& a);
std::string serialize_automaton(const Didpda& d);

/// One `CHECK <id> ...` line per result, framed by the version line and a
/// closing `ALL PASS` or `FAILED <k> OF <total>` line.
std::string render_report(std::span<const CheckResult> results);
std::string render_check(const CheckResult& r);

/// Reads back the CHECK lines of a rendered report (runtime is not encoded).
std::vector<CheckResult> parse_report(std::string_view text);

}  // namespace idpda::format
