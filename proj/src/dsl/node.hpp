#pragma once

#include "dsl/expr.hpp"

namespace hahnvar::dsl {

struct Node {
  NodeKind kind = NodeKind::Number;
  double number = 0.0;
  Slot slot = 0;
  Function fn = Function::Sin;
  Expr lhs;
  Expr rhs;
};

}  // namespace hahnvar::dsl
