#pragma once

#include <string_view>
#include <vector>

#include "core/hahn_params.hpp"
#include "core/lattice.hpp"
#include "dsl/expr.hpp"

namespace hahnvar {

/// An instance of the higher-order problem
///   extremize  int_a^b L(t, y(s^r t), D[y o s^(r-1)](t), ..., D^r[y](t)) d_{q,w} t
/// subject to D^i y(a) = alpha_i and D^i y(b) = beta_i for i < r.
struct Problem {
  HahnParams params;
  int r;
  double a;
  double b;
  std::vector<double> alpha;
  std::vector<double> beta;
  dsl::Lagrangian lagrangian;
  /// Maximization is handled by minimizing -L.
  bool maximize = false;

  Problem(HahnParams params, int r, double a, double b, std::vector<double> alpha,
          std::vector<double> beta, dsl::Lagrangian lagrangian);

  Lattice lattice(int depth) const { return Lattice(params, a, b, depth); }
};

/// Parses and validates the Lagrangian text against r.
Problem make_problem(double q, double omega, int r, double a, double b, std::vector<double> alpha,
                     std::vector<double> beta, std::string_view lagrangian);

/// (q, omega) = (1/2, 1/2), [-1, 1], L = (u0 + 1/2)^2 (u1^2 - 1)^2,
/// y(-1) = 0, y(1) = -1. Its minimizer is discontinuous.
Problem discontinuous_minimizer_problem();

}  // namespace hahnvar
