// Text syntax for metric formulas and theories.
//
//   formula := iff
//   iff     := impl ("<->" impl)*                     left associative
//   impl    := disj ("->" impl)?                      right associative
//   disj    := conj ("|" conj)*
//   conj    := bin ("&" bin)*
//   bin     := unary (("U"|"R"|"S"|"T") intv? bin)?   right associative
//   unary   := ("~"|"X"|"wX"|"Y"|"wY"|"G"|"F"|"H"|"O") intv? unary
//            | atom | "#true" | "#false" | "#init" | "#final" | "(" formula ")"
//   intv    := "[" m ".." (n|"w") ")" | "[" m ".." n "]" | "(" m ".." (n|"w") ")"
//            | "(" m ".." n "]" | "[" m "]" | "<=" n | ">=" m
//
// Binary temporal connectives bind tighter than conjunction. This is a
// convention of this syntax; the underlying logic does not fix it.
#pragma once

#include <string>
#include <string_view>

#include "mel/formula.hpp"

namespace mel {

Formula parse_formula(std::string_view text);

/// One formula per line; `%` starts a comment; a formula continues onto the
/// following lines while brackets remain open. Errors carry the line number
/// within the whole text.
Theory parse_theory(std::string_view text, std::string name = {});

/// Parses a standalone interval such as "[0..30]" or ">=5".
Interval parse_interval(std::string_view text);

}  // namespace mel
