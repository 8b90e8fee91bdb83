#ifndef GKML_PARSER_HPP
#define GKML_PARSER_HPP

#include <string>

#include "gkml/formula.hpp"

namespace gkml {

/// Syntax error with 1-based position and the tokens that would have been
/// accepted at that point.
struct ParseError : Error {
  ParseError(std::string msg, int line, int column, std::string expected_tokens);
  int line;
  int column;
  std::string expected;  // comma-separated token list
};

// Concrete syntax:
//   formula  := iff
//   iff      := imp ("<->" imp)*          "<->" expands to the defining conjunction
//   imp      := or ("->" imp)?            right associative
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | "[]" unary | "<>" unary | atomterm
//   atomterm := ident | "bot" | "top" | "{" rational "}" | "(" formula ")"
// Identifiers are [a-z][a-z0-9_]*; "bot" and "top" are reserved.
Formula parse(const std::string& text);

struct PrintOptions {
  bool unicode = false;  // box/diamond/and/or/implies/not/bot/top as real glyphs
};

/// Canonical text; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f, const PrintOptions& opts = {});

}  // namespace gkml

#endif  // GKML_PARSER_HPP
