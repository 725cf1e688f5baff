#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nh/nilhecke.hpp"

namespace nh {

// Operator expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'd'INT | 't'INT | 's'INT | 'e' | 'eP[' ints ']'
//           | '(' expr ')' | '-' factor
//   rational := INT ['/' INT]
// '*' is composition and binds tighter than '+'/'-'; both are
// left-associative.
struct OperatorExpr {
  enum class Kind { scalar, delta, variable, reflection, identity, idempotent,
                    add, sub, mul, neg };
  Kind kind;
  Rational scalar;                 // Kind::scalar
  int index = 0;                   // delta / variable / reflection
  std::vector<int> parabolic;     // idempotent
  std::vector<std::unique_ptr<OperatorExpr>> children;
};

struct ParseError : std::runtime_error {
  int position;  // 1-based byte offset into the source
  ParseError(const std::string& msg, int pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

// Parses the grammar above; throws ParseError with a 1-based position.
std::unique_ptr<OperatorExpr> parse_expr(const std::string& src);

// Evaluates an AST to a normal-form NH element over the given context.
NHElement evaluate_expr(const OperatorExpr& e, const NHContextPtr& ctx);

// Prints a normal-form element in the expression grammar, so that
// parse -> evaluate round-trips to an equal element. Zero prints as "0".
std::string format_nh(const NHElement& h);

}  // namespace nh
