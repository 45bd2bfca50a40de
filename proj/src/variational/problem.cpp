#include "variational/problem.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace hahnvar {

Problem::Problem(HahnParams params_, int r_, double a_, double b_, std::vector<double> alpha_,
                 std::vector<double> beta_, dsl::Lagrangian lagrangian_)
    : params(params_),
      r(r_),
      a(a_),
      b(b_),
      alpha(std::move(alpha_)),
      beta(std::move(beta_)),
      lagrangian(std::move(lagrangian_)) {
  if (r < 1) raise(ErrorCode::InvalidArgument, "problem order r must be positive");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    raise(ErrorCode::InvalidArgument, "problem needs finite a < b");
  if (alpha.size() != static_cast<std::size_t>(r) || beta.size() != static_cast<std::size_t>(r))
    raise(ErrorCode::InvalidArgument,
          "alpha and beta must each hold exactly r = " + std::to_string(r) + " values");
  if (lagrangian.order() != r)
    raise(ErrorCode::ArityError, "Lagrangian order differs from the problem order");
}

Problem make_problem(double q, double omega, int r, double a, double b, std::vector<double> alpha,
                     std::vector<double> beta, std::string_view lagrangian) {
  dsl::Lagrangian lag = dsl::compile_lagrangian(dsl::parse(lagrangian), r);
  return Problem(HahnParams(q, omega), r, a, b, std::move(alpha), std::move(beta), std::move(lag));
}

Problem discontinuous_minimizer_problem() {
  return make_problem(0.5, 0.5, 1, -1.0, 1.0, {0.0}, {-1.0}, "(u0 + 0.5)^2 * (u1^2 - 1)^2");
}

}  // namespace hahnvar
