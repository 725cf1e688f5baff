#include "nh/expr.hpp"

#include <cctype>
#include <sstream>

#include "nh/parabolic.hpp"

namespace nh {

namespace {

using ExprPtr = std::unique_ptr<OperatorExpr>;

ExprPtr make_node(OperatorExpr::Kind k) {
  auto e = std::make_unique<OperatorExpr>();
  e->kind = k;
  return e;
}

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, static_cast<int>(at) + 1);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool eat_char(char c) {
    if (peek_char(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) fail("expected integer", pos);
    return std::stol(src.substr(start, pos - start));
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of expression", pos);
    std::size_t start = pos;
    char c = src[pos];
    if (c == '(') {
      ++pos;
      ExprPtr inner;
      try {
        inner = parse_expr();
      } catch (const ParseError& e) {
        // Errors at end-of-input point back at the opening parenthesis.
        if (e.position == static_cast<int>(src.size()) + 1)
          fail("unclosed parenthesis", start);
        throw;
      }
      if (!eat_char(')')) fail("unclosed parenthesis", start);
      return inner;
    }
    if (c == '-') {
      ++pos;
      auto node = make_node(OperatorExpr::Kind::neg);
      node->children.push_back(parse_factor());
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_uint();
      Rational q(num);
      skip_ws();
      if (pos < src.size() && src[pos] == '/') {
        ++pos;
        long den = parse_uint();
        if (den == 0) fail("zero denominator", start);
        q = Rational(num, den);
        q.canonicalize();
      }
      auto node = make_node(OperatorExpr::Kind::scalar);
      node->scalar = q;
      return node;
    }
    if (c == 'd' || c == 't' || c == 's') {
      ++pos;
      if (pos >= src.size() ||
          !std::isdigit(static_cast<unsigned char>(src[pos])))
        fail("expected index after atom", pos);
      long idx = parse_uint();
      auto node = make_node(c == 'd'   ? OperatorExpr::Kind::delta
                            : c == 't' ? OperatorExpr::Kind::variable
                                       : OperatorExpr::Kind::reflection);
      node->index = static_cast<int>(idx);
      return node;
    }
    if (c == 'e') {
      // "eP[...]" or the bare identity "e".
      if (src.compare(pos, 3, "eP[") == 0) {
        pos += 3;
        auto node = make_node(OperatorExpr::Kind::idempotent);
        skip_ws();
        if (!peek_char(']')) {
          node->parabolic.push_back(static_cast<int>(parse_uint()));
          while (eat_char(',')) {
            node->parabolic.push_back(static_cast<int>(parse_uint()));
          }
        }
        if (!eat_char(']')) fail("unclosed parabolic list", start);
        return node;
      }
      ++pos;
      return make_node(OperatorExpr::Kind::identity);
    }
    fail("unexpected character", pos);
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (eat_char('*')) {
      auto node = make_node(OperatorExpr::Kind::mul);
      node->children.push_back(std::move(lhs));
      node->children.push_back(parse_factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      skip_ws();
      if (pos >= src.size() || (src[pos] != '+' && src[pos] != '-')) break;
      bool sub = src[pos] == '-';
      ++pos;
      auto node =
          make_node(sub ? OperatorExpr::Kind::sub : OperatorExpr::Kind::add);
      node->children.push_back(std::move(lhs));
      node->children.push_back(parse_term());
      lhs = std::move(node);
    }
    return lhs;
  }
};

}  // namespace

std::unique_ptr<OperatorExpr> parse_expr(const std::string& src) {
  Parser p(src);
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size())
    throw ParseError("trailing input", static_cast<int>(p.pos) + 1);
  return e;
}

NHElement evaluate_expr(const OperatorExpr& e, const NHContextPtr& ctx) {
  using Kind = OperatorExpr::Kind;
  switch (e.kind) {
    case Kind::scalar:
      return NHElement::identity(ctx) * e.scalar;
    case Kind::delta:
      return NHElement::delta(ctx, e.index);
    case Kind::variable:
      return NHElement::multiplication(
          ctx, Polynomial::variable(ctx->vars(), e.index));
    case Kind::reflection:
      return NHElement::embed(ctx, ctx->group().simple(e.index));
    case Kind::identity:
      return NHElement::identity(ctx);
    case Kind::idempotent:
      return parabolic_idempotent(ctx, ParabolicSubset(e.parabolic));
    case Kind::neg:
      return -evaluate_expr(*e.children[0], ctx);
    case Kind::add:
      return evaluate_expr(*e.children[0], ctx) +
             evaluate_expr(*e.children[1], ctx);
    case Kind::sub:
      return evaluate_expr(*e.children[0], ctx) -
             evaluate_expr(*e.children[1], ctx);
    case Kind::mul:
      return evaluate_expr(*e.children[0], ctx) *
             evaluate_expr(*e.children[1], ctx);
  }
  throw std::logic_error("unreachable expression kind");
}

std::string format_nh(const NHElement& h) {
  if (h.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : h.coeffs()) {
    for (const auto& [m, coef] : c.terms()) {
      Rational a = abs(coef);
      if (first) {
        if (sgn(coef) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(coef) < 0 ? " - " : " + ");
      }
      std::vector<std::string> factors;
      if (a != 1) factors.push_back(to_string(a));
      for (int j = 0; j < m.vars(); ++j)
        for (int rep = 0; rep < m.exps[j]; ++rep)
          factors.push_back("t" + std::to_string(j + 1));
      for (int i : w.reduced_word()) factors.push_back("d" + std::to_string(i));
      if (factors.empty()) factors.push_back("e");
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out << "*";
        out << factors[k];
      }
    }
  }
  return out.str();
}

}  // namespace nh
