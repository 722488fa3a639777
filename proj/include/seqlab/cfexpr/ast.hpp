#pragma once

#include <memory>
#include <string>
#include <vector>

#include "seqlab/exact/integer.hpp"

namespace seqlab::cf {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class NodeKind { number, param, x, g, neg, add, sub, mul, div, pow };

struct Node {
  NodeKind kind;
  Integer number;       // number
  std::string name;     // param
  unsigned exponent{};  // pow
  NodePtr lhs;          // neg, binary, pow
  NodePtr rhs;          // binary
  std::size_t position{};
};

/// Parsed generating-function equation right-hand side E(x, g), with the
/// parameter names it was parsed against.
class Expr {
 public:
  Expr(NodePtr root, std::vector<std::string> params, std::string text)
      : root_(std::move(root)), params_(std::move(params)), text_(std::move(text)) {}

  const Node& root() const { return *root_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& source() const { return text_; }

  // Re-parseable text form with minimal parentheses.
  std::string to_string() const;

  // Upper bound on the degree in g of g*den(E) - num(E) after clearing
  // denominators, computed structurally.
  unsigned cleared_g_degree() const;

  bool mentions_g() const;

 private:
  NodePtr root_;
  std::vector<std::string> params_;
  std::string text_;
};

}  // namespace seqlab::cf
