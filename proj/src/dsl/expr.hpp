#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace hahnvar::dsl {

enum class NodeKind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Function { Sin, Cos, Exp, Ln, Sqrt, Abs };

const char* to_string(Function fn) noexcept;

/// Variable slot: 0 is t, j + 1 is u_j (j = 0..9).
using Slot = int;
constexpr int kMaxSlots = 11;

Slot slot_of(std::string_view name);  // -1 when not a variable name
std::string slot_name(Slot slot);

struct Node;

/// Immutable expression tree; copies share nodes.
class Expr {
 public:
  static Expr number(double value);
  static Expr var(Slot slot);
  static Expr neg(Expr child);
  static Expr binary(NodeKind op, Expr lhs, Expr rhs);
  static Expr call(Function fn, Expr child);

  NodeKind kind() const noexcept;
  double value() const;  // Number
  Slot slot() const;     // Var
  Function function() const;  // Call
  const Expr& lhs() const;    // Neg, Call, binary ops
  const Expr& rhs() const;    // binary ops

  /// Highest u-index referenced, -1 when none.
  int max_u_index() const;
  bool uses_slot(Slot slot) const;

  /// Fully parenthesised text that parses back to the same tree.
  std::string to_string() const;

 private:
  friend struct Node;
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool structurally_equal(const Expr& x, const Expr& y);

Expr parse(std::string_view text);

/// `bindings[0]` is t, `bindings[j + 1]` is u_j.
double evaluate(const Expr& expr, std::span<const double> bindings);

/// d expr / d (slot) at the bindings, by forward-mode dual numbers.
double partial_eval(const Expr& expr, std::span<const double> bindings, Slot var);

/// Value and every partial in slots [first, first + count) in one call.
void evaluate_with_partials(const Expr& expr, std::span<const double> bindings, Slot first,
                            std::span<double> partials, double* value = nullptr);

/// L(t, u_0, ..., u_r) with the variable set checked against r.
class Lagrangian {
 public:
  Lagrangian(Expr expr, int order);

  const Expr& expr() const noexcept { return expr_; }
  int order() const noexcept { return order_; }

  double operator()(std::span<const double> args) const { return evaluate(expr_, args); }
  /// partial_{i+2} L, i.e. d/du_i.
  double partial_u(std::span<const double> args, int i) const {
    return partial_eval(expr_, args, i + 1);
  }

 private:
  Expr expr_;
  int order_;
};

Lagrangian compile_lagrangian(const Expr& expr, int r);

}  // namespace hahnvar::dsl
