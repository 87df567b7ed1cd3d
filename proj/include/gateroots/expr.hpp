#pragma once

// Gate expressions: catalog names composed by product, tensor, root and
// dagger. Concrete syntax:
//
//   expr    := product
//   product := tensor ( "." tensor )*
//   tensor  := atom ( "x" atom )*
//   atom    := NAME | "root(" expr "," INT ")" | "sqrt(" expr ")"
//            | "dag(" expr ")" | "(" expr ")"
//
// "x" binds tighter than "."; both are left-associative; whitespace is
// ignored; "sqrt(e)" is "root(e,2)".

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "gateroots/gates.hpp"

namespace gateroots {

class GateExpr;
using GateExprPtr = std::shared_ptr<const GateExpr>;

struct NameNode {
  GateName name;
};
struct ProductNode {
  GateExprPtr left, right;
};
struct TensorNode {
  GateExprPtr left, right;
};
struct RootNode {
  GateExprPtr inner;
  unsigned order;
};
struct DaggerNode {
  GateExprPtr inner;
};

class GateExpr {
 public:
  using Node = std::variant<NameNode, ProductNode, TensorNode, RootNode, DaggerNode>;

  static GateExprPtr name(GateName g);
  static GateExprPtr product(GateExprPtr left, GateExprPtr right);
  static GateExprPtr tensor(GateExprPtr left, GateExprPtr right);
  /// Throws DomainError for order 0.
  static GateExprPtr root(GateExprPtr inner, unsigned order);
  static GateExprPtr dagger(GateExprPtr inner);

  const Node& node() const noexcept { return node_; }

  explicit GateExpr(Node node) : node_(std::move(node)) {}

 private:
  Node node_;
};

/// Structural equality.
bool same_expr(const GateExpr& a, const GateExpr& b);

/// Root nodes use the closed involution form when the operand passes
/// is_involution(., 1e-10) and the spectral principal root otherwise.
UnitaryGate evaluate(const GateExpr& expr);

/// Canonical concrete syntax; parse_expr(to_string(e)) reproduces e.
std::string to_string(const GateExpr& expr);

/// Recursive-descent parser for the grammar above. Throws ParseError.
GateExprPtr parse_expr(std::string_view text);

}  // namespace gateroots
