#include "seqlab/cfexpr/parser.hpp"

#include <algorithm>
#include <cctype>

#include "seqlab/error.hpp"

namespace seqlab::cf {

namespace {

NodePtr make_leaf(NodeKind kind, std::size_t pos) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->position = pos;
  return n;
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs, std::size_t pos) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->position = pos;
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& params)
      : s_(text), params_(params) {}

  NodePtr run() {
    NodePtr e = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  NodePtr expr() {
    skip();
    NodePtr lhs;
    if (peek('-')) {
      const std::size_t at = pos_++;
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::neg;
      n->lhs = term();
      n->position = at;
      lhs = n;
    } else {
      lhs = term();
    }
    while (true) {
      skip();
      if (!peek('+') && !peek('-')) return lhs;
      const std::size_t at = pos_;
      const NodeKind kind = s_[pos_++] == '+' ? NodeKind::add : NodeKind::sub;
      lhs = make_binary(kind, lhs, term(), at);
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      skip();
      if (!peek('*') && !peek('/')) return lhs;
      const std::size_t at = pos_;
      const NodeKind kind = s_[pos_++] == '*' ? NodeKind::mul : NodeKind::div;
      lhs = make_binary(kind, lhs, factor(), at);
    }
  }

  NodePtr factor() {
    NodePtr b = base();
    skip();
    if (!peek('^')) return b;
    const std::size_t at = pos_++;
    skip();
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected unsigned integer exponent", pos_);
    const Integer e = Integer::parse(s_.substr(digits, pos_ - digits));
    if (!e.fits_long() || e.to_long() > 4096) throw ParseError("exponent too large", digits);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::pow;
    n->lhs = std::move(b);
    n->exponent = static_cast<unsigned>(e.to_long());
    n->position = at;
    return n;
  }

  NodePtr base() {
    skip();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      skip();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::number;
      n->number = Integer::parse(s_.substr(at, pos_ - at));
      n->position = at;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(at, pos_ - at));
      if (name == "x") return make_leaf(NodeKind::x, at);
      if (name == "g") return make_leaf(NodeKind::g, at);
      if (std::find(params_.begin(), params_.end(), name) == params_.end()) {
        throw ParseError("unknown identifier '" + name + "'", at);
      }
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::param;
      n->name = name;
      n->position = at;
      return n;
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(char c) const { return !at_end() && s_[pos_] == c; }

  std::string_view s_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const std::vector<std::string>& params) {
  for (const auto& p : params) {
    if (p == "x" || p == "g") throw ParseError("parameter name '" + p + "' is reserved", 0);
  }
  Expr e(Parser(text, params).run(), params, std::string(text));
  if (e.cleared_g_degree() > 2) {
    throw ParseError("equation is more than quadratic in g after clearing denominators", 0);
  }
  return e;
}

namespace {

Poly poly_of(const Node& n) {
  switch (n.kind) {
    case NodeKind::number: return Poly(n.number);
    case NodeKind::param: return Poly::variable(n.name);
    case NodeKind::x:
    case NodeKind::g: throw ParseError("x and g are not allowed in a parameter formula", n.position);
    case NodeKind::neg: return -poly_of(*n.lhs);
    case NodeKind::pow: return pow(poly_of(*n.lhs), n.exponent);
    case NodeKind::add: return poly_of(*n.lhs) + poly_of(*n.rhs);
    case NodeKind::sub: return poly_of(*n.lhs) - poly_of(*n.rhs);
    case NodeKind::mul: return poly_of(*n.lhs) * poly_of(*n.rhs);
    case NodeKind::div: {
      const Poly d = poly_of(*n.rhs);
      if (!d.is_constant()) throw ParseError("division by a non-constant polynomial", n.position);
      return exact_div(poly_of(*n.lhs), d);
    }
  }
  throw ParseError("malformed expression", n.position);
}

}  // namespace

Poly to_poly(const Expr& e) {
  return poly_of(e.root());
}

}  // namespace seqlab::cf
