#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "dsl/expr.hpp"

using namespace hahnvar;
using namespace hahnvar::dsl;
using doctest::Approx;

namespace {

double eval_text(const std::string& text, std::vector<double> bindings = {0.0}) {
  return evaluate(parse(text), bindings);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::size_t syntax_position(const std::string& text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("expected a syntax error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(eval_text("1 + 2 * 3") == 7.0);
  CHECK(eval_text("2 ^ 3 ^ 2") == Approx(512.0).epsilon(1e-14));
  CHECK(eval_text("-2 ^ 2") == 4.0);
  CHECK(eval_text("8 / 4 / 2") == 1.0);
  CHECK(eval_text("10 - 4 - 3") == 3.0);
  CHECK(eval_text("(1 + 2) * 3") == 9.0);
  CHECK(eval_text("1.5e2 + .5") == 150.5);
  CHECK(eval_text("3 \xE2\x88\x92 1") == 2.0);
}

TEST_CASE("variables and functions") {
  const std::vector<double> b = {2.0, 3.0, 5.0, 7.0};
  CHECK(eval_text("t * u0 + u1 - u2", b) == 2.0 * 3.0 + 5.0 - 7.0);
  CHECK(eval_text("sin(t)^2 + cos(t)^2", b) == Approx(1.0));
  CHECK(eval_text("exp(ln(u2))", b) == Approx(7.0));
  CHECK(eval_text("sqrt(abs(-u0 * u0))", b) == Approx(3.0));
  CHECK(eval_text("t ^ 0.5", b) == Approx(std::sqrt(2.0)));
  CHECK(eval_text("t ^ -2", b) == Approx(0.25));
}

TEST_CASE("forward-mode partials match central differences") {
  const Expr e = parse("t * u0^3 + sin(u1 * u0) - exp(t) / (1 + u1^2)");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> b = {uni(rng), uni(rng), uni(rng)};
    for (Slot s = 0; s < 3; ++s) {
      const double h = 1e-6;
      std::vector<double> up = b, dn = b;
      up[s] += h;
      dn[s] -= h;
      const double fd = (evaluate(e, up) - evaluate(e, dn)) / (2 * h);
      CHECK(partial_eval(e, b, s) == Approx(fd).epsilon(1e-6));
    }
    std::vector<double> grads(2);
    double value = 0.0;
    evaluate_with_partials(e, b, 1, grads, &value);
    CHECK(value == Approx(evaluate(e, b)));
    CHECK(grads[0] == Approx(partial_eval(e, b, 1)));
    CHECK(grads[1] == Approx(partial_eval(e, b, 2)));
  }
}

TEST_CASE("syntax errors report a byte position") {
  CHECK(syntax_position("(t") == 2);
  CHECK(syntax_position("t +") == 3);
  CHECK(syntax_position("t $ 1") == 2);
  CHECK(syntax_position("sin t") == 4);
  CHECK(syntax_position("1e+") == 3);
  CHECK(syntax_position("   ") == 0);
  CHECK(syntax_position("t t") == 2);
  CHECK(code_of([] { parse(")"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("identifier and binding errors") {
  CHECK(code_of([] { parse("foo + 1"); }) == ErrorCode::UnknownIdentifier);
  CHECK(code_of([] { parse("u10"); }) == ErrorCode::UnknownIdentifier);
  CHECK(code_of([] { eval_text("u3", {0.0, 1.0}); }) == ErrorCode::UnboundVariable);
  CHECK(code_of([] { eval_text("ln(t)", {0.0}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { eval_text("1 / t", {0.0}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { eval_text("sqrt(t)", {-1.0}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { eval_text("t ^ 0.5", {-1.0}); }) == ErrorCode::DomainError);
  const Expr a = parse("abs(u0)");
  const std::vector<double> at_zero = {0.0, 0.0};
  CHECK(code_of([&] { partial_eval(a, at_zero, 1); }) == ErrorCode::NotDifferentiable);
  CHECK(partial_eval(a, at_zero, 0) == 0.0);
}

TEST_CASE("printing round-trips structurally") {
  for (const char* text : {"t^2 - 3*u0", "-(u1 + t)^-2", "sin(cos(t)) / exp(u0 * u1)",
                           "2^3^2", "1 - (2 - 3)", "abs(-t) + sqrt(u2)", "0.1 + 1e-300"}) {
    const Expr e = parse(text);
    const Expr back = parse(e.to_string());
    CHECK_MESSAGE(structurally_equal(e, back), text);
    CHECK(back.to_string() == e.to_string());
  }
  CHECK_FALSE(structurally_equal(parse("t + 1"), parse("1 + t")));
}

TEST_CASE("Lagrangian arity") {
  const Lagrangian l = compile_lagrangian(parse("u1^2 + t * u0"), 1);
  CHECK(l.order() == 1);
  const std::vector<double> args = {2.0, 3.0, 4.0};
  CHECK(l(args) == 22.0);
  CHECK(l.partial_u(args, 0) == 2.0);
  CHECK(l.partial_u(args, 1) == 8.0);
  CHECK(code_of([] { compile_lagrangian(parse("u2"), 1); }) == ErrorCode::ArityError);
  CHECK(code_of([] { compile_lagrangian(parse("u0"), 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { compile_lagrangian(parse("(u0 + 0.5)^2 * (u1^2 - 1)^2"), 0); }) ==
        ErrorCode::ArityError);
  CHECK(compile_lagrangian(parse("0.5*(2*u2)^2 - 3*u0"), 2).order() == 2);
  CHECK(parse("t + 1").max_u_index() == -1);
  CHECK(parse("u3 * u1").max_u_index() == 3);
  CHECK(parse("u3 * t").uses_slot(0));
}

TEST_CASE("the discontinuous example integrand") {
  const Expr e = parse("(u0 + 0.5)^2 * (u1^2 - 1)^2");
  CHECK(e.kind() == NodeKind::Mul);
  CHECK(parse("t").kind() == NodeKind::Var);
  CHECK(syntax_position("(u2") == 3);
  const std::vector<double> half = {0.3, -0.5, 7.0};
  const std::vector<double> unit = {0.3, 4.0, -1.0};
  const std::vector<double> origin = {0.3, 0.0, 0.0};
  const std::vector<double> other = {0.3, 0.5, 2.0};
  CHECK(evaluate(e, half) == 0.0);
  CHECK(evaluate(e, unit) == 0.0);
  CHECK(evaluate(e, origin) == 0.25);
  CHECK(partial_eval(e, origin, 2) == 0.0);
  CHECK(partial_eval(e, other, 2) == 24.0);
  CHECK(partial_eval(parse("u0^2"), std::vector<double>{0.0, 3.0}, 1) == 6.0);
}

namespace {

// Random polynomial/trig expression over t, u0, u1 of bounded depth.
std::string random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  const char* vars[] = {"t", "u0", "u1"};
  if (depth == 0) {
    const int k = pick(rng);
    if (k < 6) return vars[k % 3];
    return std::to_string(k - 4) + ".25";
  }
  const std::string x = random_expr(rng, depth - 1);
  const std::string y = random_expr(rng, depth - 1);
  switch (pick(rng)) {
    case 0: return "sin(" + x + ")";
    case 1: return "cos(" + x + ")";
    case 2: return "(" + x + ")^2";
    case 3: return "-" + x;
    case 4: return x + " - " + y;
    case 5: return "(" + x + ") * (" + y + ")";
    case 6: return "exp(" + x + " / 4)";
    default: return x + " + " + y;
  }
}

}  // namespace

TEST_CASE("round trip over a random corpus") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const std::string text = random_expr(rng, 4);
    const Expr e = parse(text);
    CHECK_MESSAGE(structurally_equal(e, parse(e.to_string())), text);
  }
}

TEST_CASE("AD agrees with central differences and is linear") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const std::string t1 = random_expr(rng, 3);
    const std::string t2 = random_expr(rng, 3);
    const Expr e1 = parse(t1);
    const Expr e2 = parse(t2);
    const Expr combo = parse("1.5 * (" + t1 + ") - 0.75 * (" + t2 + ")");
    std::vector<double> b = {uni(rng), uni(rng), uni(rng)};
    for (Slot s = 0; s < 3; ++s) {
      const double h = 1e-5;
      std::vector<double> up = b, dn = b;
      up[s] += h;
      dn[s] -= h;
      const double ad = partial_eval(e1, b, s);
      const double fd = (evaluate(e1, up) - evaluate(e1, dn)) / (2 * h);
      CHECK_MESSAGE(std::abs(ad - fd) <= 1e-6 * (1 + std::abs(ad)), t1);
      const double lin = 1.5 * ad - 0.75 * partial_eval(e2, b, s);
      CHECK(partial_eval(combo, b, s) == Approx(lin).epsilon(1e-12).scale(1.0));
    }
    CHECK(evaluate(e1, b) == evaluate(parse(t1), b));
  }
}
