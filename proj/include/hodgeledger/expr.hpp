#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hodgeledger/hodge_class.hpp"

namespace hodgeledger {

// AST of the little expression language:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom | call | '(' expr ')'
// '*' is the tensor product, '+'/'-' are entrywise.  Integer literals are
// legal only as the first argument of the functions that take a count or a
// degree (ab, curve, P, sym, wedge, shift, tate, angle, scale), where they
// may be negative.
struct Expr {
  enum class Kind { atom, number, call, binary };

  Kind kind = Kind::atom;
  std::size_t offset = 0;           // 1-based byte position, for errors
  std::string name;                 // atom / call
  long long number = 0;             // number
  char op = 0;                      // binary: '+', '-', '*'
  std::vector<std::unique_ptr<Expr>> args;  // call arguments or binary operands
};

using ExprPtr = std::unique_ptr<Expr>;

// Parses or raises ParseError / ArityError / UnknownIdentifier, all
// carrying 1-based byte offsets; never aborts on any input.
ExprPtr parse_expr(const std::string& text);

// Evaluates a parsed tree to a class.  Argument-range and shape problems
// surface as the library errors of the operations involved.
HodgeClass evaluate(const Expr& ast);

}  // namespace hodgeledger
