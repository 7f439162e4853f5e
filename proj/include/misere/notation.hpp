#pragma once

#include "misere/augmented.hpp"
#include "misere/games.hpp"

#include <memory>
#include <string>

// Text syntax for forms.
//
//   expr   := term ('+' term)*
//   term   := COUNT 'x' factor | factor
//   factor := '~' factor | atom
//   atom   := INT | '*' | '(' expr ')' | '{' list '|' list '}'
//   list   := empty | '.' | item (',' item)*
//   item   := expr | '#'
//
// '~' is conjugation, '#' a tombstone, 'x' repetition, '.' an empty side.
// INT is a non-negative decimal; negative integers are written ~n or -n.
// Precedence: ~ > x > +. Whitespace is insignificant.

namespace misere {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

struct Expr {
  enum class Kind { Int, Star, Braces, Conj, Sum, Repeat };
  Kind kind = Kind::Int;
  long value = 0;  // Int value or Repeat count
  std::vector<Expr> kids;
  std::vector<Expr> lefts, rights;  // Braces
  bool left_tomb = false, right_tomb = false;
  std::size_t pos = 0;
};

Expr parse(const std::string& text);

AugId elaborate(Engine& eng, const Expr& e);

// Parse + elaborate in one go.
AugId read_form(Engine& eng, const std::string& text);
GameId read_plain(Engine& eng, const std::string& text);  // throws if any tombstone appears

// Canonical printer. The top level is always an explicit brace form;
// nested options print as integers when they are game integers. Round
// trip: elaborate(parse(print(x))) == x.
std::string print(const Engine& eng, AugId a);

}  // namespace misere
