#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "dsl/expr.hpp"

namespace hahnvar::dsl {

namespace {

/// a + b eps with eps^2 = 0.
struct Dual {
  double v = 0.0;
  double d = 0.0;
};

Dual operator+(Dual x, Dual y) { return {x.v + y.v, x.d + y.d}; }
Dual operator-(Dual x, Dual y) { return {x.v - y.v, x.d - y.d}; }
Dual operator-(Dual x) { return {-x.v, -x.d}; }
Dual operator*(Dual x, Dual y) { return {x.v * y.v, x.d * y.v + x.v * y.d}; }
Dual operator/(Dual x, Dual y) { return {x.v / y.v, (x.d * y.v - x.v * y.d) / (y.v * y.v)}; }

double value_of(double x) { return x; }
double value_of(Dual x) { return x.v; }

[[noreturn]] void domain(const std::string& what) { raise(ErrorCode::DomainError, what); }

double apply(Function fn, double x) {
  switch (fn) {
    case Function::Sin: return std::sin(x);
    case Function::Cos: return std::cos(x);
    case Function::Exp: return std::exp(x);
    case Function::Ln:
      if (!(x > 0.0)) domain("ln of non-positive value " + std::to_string(x));
      return std::log(x);
    case Function::Sqrt:
      if (x < 0.0) domain("sqrt of negative value " + std::to_string(x));
      return std::sqrt(x);
    case Function::Abs: return std::abs(x);
  }
  return x;
}

Dual apply(Function fn, Dual x) {
  switch (fn) {
    case Function::Sin: return {std::sin(x.v), std::cos(x.v) * x.d};
    case Function::Cos: return {std::cos(x.v), -std::sin(x.v) * x.d};
    case Function::Exp: {
      const double e = std::exp(x.v);
      return {e, e * x.d};
    }
    case Function::Ln:
      if (!(x.v > 0.0)) domain("ln of non-positive value " + std::to_string(x.v));
      return {std::log(x.v), x.d / x.v};
    case Function::Sqrt: {
      if (x.v < 0.0) domain("sqrt of negative value " + std::to_string(x.v));
      const double s = std::sqrt(x.v);
      if (s == 0.0) {
        if (x.d != 0.0) raise(ErrorCode::NotDifferentiable, "sqrt is not differentiable at 0");
        return {0.0, 0.0};
      }
      return {s, x.d / (2.0 * s)};
    }
    case Function::Abs:
      if (x.v == 0.0) {
        if (x.d != 0.0) raise(ErrorCode::NotDifferentiable, "abs is not differentiable at 0");
        return {0.0, 0.0};
      }
      return x.v > 0.0 ? x : -x;
  }
  return x;
}

template <typename S>
S divide(S x, S y) {
  if (value_of(y) == 0.0) domain("division by zero");
  return x / y;
}

/// Integer literal exponent, possibly negated.
bool integer_exponent(const Expr& e, long& out) {
  if (e.kind() == NodeKind::Neg) {
    if (!integer_exponent(e.lhs(), out)) return false;
    out = -out;
    return true;
  }
  if (e.kind() != NodeKind::Number) return false;
  const double v = e.value();
  if (v != std::floor(v) || std::abs(v) > 1e6) return false;
  out = static_cast<long>(v);
  return true;
}

template <typename S>
S integer_power(S base, long n) {
  const bool invert = n < 0;
  unsigned long m = static_cast<unsigned long>(invert ? -n : n);
  S result{1.0};
  while (m > 0) {
    if (m & 1u) result = result * base;
    base = base * base;
    m >>= 1u;
  }
  return invert ? divide(S{1.0}, result) : result;
}

template <typename S>
S eval(const Expr& e, const S* slots, std::size_t count) {
  switch (e.kind()) {
    case NodeKind::Number: return S{e.value()};
    case NodeKind::Var: {
      const auto s = static_cast<std::size_t>(e.slot());
      if (s >= count) raise(ErrorCode::UnboundVariable, "variable " + slot_name(e.slot()) + " is unbound");
      return slots[s];
    }
    case NodeKind::Neg: return -eval(e.lhs(), slots, count);
    case NodeKind::Call: return apply(e.function(), eval(e.lhs(), slots, count));
    case NodeKind::Add: return eval(e.lhs(), slots, count) + eval(e.rhs(), slots, count);
    case NodeKind::Sub: return eval(e.lhs(), slots, count) - eval(e.rhs(), slots, count);
    case NodeKind::Mul: return eval(e.lhs(), slots, count) * eval(e.rhs(), slots, count);
    case NodeKind::Div: return divide(eval(e.lhs(), slots, count), eval(e.rhs(), slots, count));
    case NodeKind::Pow: {
      const S base = eval(e.lhs(), slots, count);
      long n = 0;
      if (integer_exponent(e.rhs(), n)) return integer_power(base, n);
      const S exponent = eval(e.rhs(), slots, count);
      if (!(value_of(base) > 0.0))
        domain("non-integer power of non-positive base " + std::to_string(value_of(base)));
      return apply(Function::Exp, exponent * apply(Function::Ln, base));
    }
  }
  return S{0.0};
}

}  // namespace

double evaluate(const Expr& expr, std::span<const double> bindings) {
  return eval<double>(expr, bindings.data(), bindings.size());
}

double partial_eval(const Expr& expr, std::span<const double> bindings, Slot var) {
  if (var < 0 || var >= kMaxSlots) raise(ErrorCode::InvalidArgument, "variable slot out of range");
  if (static_cast<std::size_t>(var) >= bindings.size())
    raise(ErrorCode::UnboundVariable, "variable " + slot_name(var) + " is unbound");
  Dual slots[kMaxSlots];
  const std::size_t count = std::min<std::size_t>(bindings.size(), kMaxSlots);
  for (std::size_t i = 0; i < count; ++i) slots[i] = {bindings[i], 0.0};
  slots[var].d = 1.0;
  return eval<Dual>(expr, slots, count).d;
}

void evaluate_with_partials(const Expr& expr, std::span<const double> bindings, Slot first,
                            std::span<double> partials, double* value) {
  for (std::size_t i = 0; i < partials.size(); ++i)
    partials[i] = partial_eval(expr, bindings, first + static_cast<Slot>(i));
  if (value) *value = evaluate(expr, bindings);
}

}  // namespace hahnvar::dsl
