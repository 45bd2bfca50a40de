#include <algorithm>
#include <cstdio>

#include "core/errors.hpp"
#include "dsl/expr.hpp"
#include "dsl/node.hpp"

namespace hahnvar::dsl {

const char* to_string(Function fn) noexcept {
  switch (fn) {
    case Function::Sin: return "sin";
    case Function::Cos: return "cos";
    case Function::Exp: return "exp";
    case Function::Ln: return "ln";
    case Function::Sqrt: return "sqrt";
    case Function::Abs: return "abs";
  }
  return "?";
}

Slot slot_of(std::string_view name) {
  if (name == "t") return 0;
  if (name.size() == 2 && name[0] == 'u' && name[1] >= '0' && name[1] <= '9')
    return name[1] - '0' + 1;
  return -1;
}

std::string slot_name(Slot slot) {
  if (slot == 0) return "t";
  return "u" + std::to_string(slot - 1);
}

Expr Expr::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Number;
  n->number = value;
  return Expr(std::move(n));
}

Expr Expr::var(Slot slot) {
  if (slot < 0 || slot >= kMaxSlots) raise(ErrorCode::InvalidArgument, "variable slot out of range");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Var;
  n->slot = slot;
  return Expr(std::move(n));
}

Expr Expr::neg(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Neg;
  n->lhs = std::move(child);
  return Expr(std::move(n));
}

Expr Expr::binary(NodeKind op, Expr lhs, Expr rhs) {
  if (op != NodeKind::Add && op != NodeKind::Sub && op != NodeKind::Mul && op != NodeKind::Div &&
      op != NodeKind::Pow)
    raise(ErrorCode::InvalidArgument, "not a binary operator");
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Expr(std::move(n));
}

Expr Expr::call(Function fn, Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Call;
  n->fn = fn;
  n->lhs = std::move(child);
  return Expr(std::move(n));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const { return node_->number; }
Slot Expr::slot() const { return node_->slot; }
Function Expr::function() const { return node_->fn; }

const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

namespace {

int max_u(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Number: return -1;
    case NodeKind::Var: return e.slot() == 0 ? -1 : e.slot() - 1;
    case NodeKind::Neg:
    case NodeKind::Call: return max_u(e.lhs());
    default: return std::max(max_u(e.lhs()), max_u(e.rhs()));
  }
}

bool uses(const Expr& e, Slot slot) {
  switch (e.kind()) {
    case NodeKind::Number: return false;
    case NodeKind::Var: return e.slot() == slot;
    case NodeKind::Neg:
    case NodeKind::Call: return uses(e.lhs(), slot);
    default: return uses(e.lhs(), slot) || uses(e.rhs(), slot);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.value());
      out += buf;
      return;
    }
    case NodeKind::Var: out += slot_name(e.slot()); return;
    case NodeKind::Neg:
      out += "-(";
      print(e.lhs(), out);
      out += ')';
      return;
    case NodeKind::Call:
      out += to_string(e.function());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
    default: break;
  }
  const char* op = e.kind() == NodeKind::Add   ? " + "
                   : e.kind() == NodeKind::Sub ? " - "
                   : e.kind() == NodeKind::Mul ? " * "
                   : e.kind() == NodeKind::Div ? " / "
                                               : " ^ ";
  out += '(';
  print(e.lhs(), out);
  out += op;
  print(e.rhs(), out);
  out += ')';
}

}  // namespace

bool structurally_equal(const Expr& x, const Expr& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case NodeKind::Number: return x.value() == y.value();
    case NodeKind::Var: return x.slot() == y.slot();
    case NodeKind::Neg: return structurally_equal(x.lhs(), y.lhs());
    case NodeKind::Call:
      return x.function() == y.function() && structurally_equal(x.lhs(), y.lhs());
    default:
      return structurally_equal(x.lhs(), y.lhs()) && structurally_equal(x.rhs(), y.rhs());
  }
}

int Expr::max_u_index() const { return max_u(*this); }
bool Expr::uses_slot(Slot slot) const { return uses(*this, slot); }

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

Lagrangian::Lagrangian(Expr expr, int order) : expr_(std::move(expr)), order_(order) {
  const int used = expr_.max_u_index();
  if (used > order)
    raise(ErrorCode::ArityError, "Lagrangian of order " + std::to_string(order) +
                                     " references u" + std::to_string(used));
  if (order < 1) raise(ErrorCode::InvalidArgument, "Lagrangian order must be positive");
}

Lagrangian compile_lagrangian(const Expr& expr, int r) { return Lagrangian(expr, r); }

}  // namespace hahnvar::dsl
