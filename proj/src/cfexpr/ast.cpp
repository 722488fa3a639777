#include "seqlab/cfexpr/ast.hpp"

#include <algorithm>
#include <utility>

namespace seqlab::cf {

namespace {

// Binding strength used by the printer.
int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::neg: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::pow: return 3;
    default: return 4;
  }
}

std::string print(const Node& n);

std::string wrap(const Node& n, bool parens) {
  return parens ? "(" + print(n) + ")" : print(n);
}

std::string print(const Node& n) {
  switch (n.kind) {
    case NodeKind::number: return n.number.to_string();
    case NodeKind::param: return n.name;
    case NodeKind::x: return "x";
    case NodeKind::g: return "g";
    case NodeKind::neg: return "-" + wrap(*n.lhs, precedence(n.lhs->kind) <= 1);
    case NodeKind::pow:
      return wrap(*n.lhs, precedence(n.lhs->kind) <= 3) + "^" + std::to_string(n.exponent);
    default: break;
  }
  const int p = precedence(n.kind);
  const char* op = n.kind == NodeKind::add ? " + "
                   : n.kind == NodeKind::sub ? " - "
                   : n.kind == NodeKind::mul ? "*"
                                             : "/";
  // Left-associative grammar: the right operand needs parentheses at equal
  // precedence, the left one only at lower precedence. A leading negation
  // is only legal at the start of an expr, so it is always wrapped.
  const bool left_parens = precedence(n.lhs->kind) < p || (n.lhs->kind == NodeKind::neg && p > 1);
  const bool right_parens = precedence(n.rhs->kind) <= p || n.rhs->kind == NodeKind::neg;
  return wrap(*n.lhs, left_parens) + op + wrap(*n.rhs, right_parens);
}

// (numerator degree, denominator degree) in g.
std::pair<unsigned, unsigned> g_degrees(const Node& n) {
  switch (n.kind) {
    case NodeKind::g: return {1, 0};
    case NodeKind::number:
    case NodeKind::param:
    case NodeKind::x: return {0, 0};
    case NodeKind::neg: return g_degrees(*n.lhs);
    case NodeKind::pow: {
      const auto [a, b] = g_degrees(*n.lhs);
      return {a * n.exponent, b * n.exponent};
    }
    default: break;
  }
  const auto [na, da] = g_degrees(*n.lhs);
  const auto [nb, db] = g_degrees(*n.rhs);
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::sub: return {std::max(na + db, nb + da), da + db};
    case NodeKind::mul: return {na + nb, da + db};
    default: return {na + db, da + nb};
  }
}

bool has_g(const Node& n) {
  if (n.kind == NodeKind::g) return true;
  return (n.lhs && has_g(*n.lhs)) || (n.rhs && has_g(*n.rhs));
}

}  // namespace

std::string Expr::to_string() const {
  return print(*root_);
}

unsigned Expr::cleared_g_degree() const {
  const auto [num, den] = g_degrees(*root_);
  return std::max(num, den + 1);
}

bool Expr::mentions_g() const {
  return has_g(*root_);
}

}  // namespace seqlab::cf
