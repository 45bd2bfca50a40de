#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "core/lattice_ops.hpp"
#include "core/series.hpp"
#include "variational/euler_lagrange.hpp"
#include "variational/problem.hpp"

namespace hahnvar {

/// Random table on `lattice`, y = c + |t - omega0| u with c, u uniform in
/// [-2, 2] (so quotients stay bounded near omega0), adjusted so that the
/// boundary data of `problem` hold exactly: each D^i y(endpoint) is affine in
/// y(endpoint + i), which is solved for in turn. A collapsed endpoint only
/// carries the i = 0 condition.
GridFunction random_admissible_grid(const Problem& problem, const Lattice& lattice,
                                    std::mt19937_64& rng);

struct NonnegativitySweep {
  int count = 0;
  double min_value = 0.0;
  int negative = 0;  // values below -1e-10
};

NonnegativitySweep nonnegativity_sweep(const Problem& problem, int count, std::uint64_t seed,
                                       int depth = 20, const SeriesOptions& options = {});

struct DiscontinuousExample {
  SeriesResult functional;
  ElReport report;
  NonnegativitySweep sweep;
};

DiscontinuousExample run_discontinuous_example(int depth = 40, double tol = 1e-9, std::uint64_t seed = 0,
                               bool include_omega0 = false);

/// Beam problem with constant rigidity `e` and load `xi` on [0, 2]:
/// L = (e u2)^2 / 2 - xi u0, r = 2, clamped ends.
Problem beam_problem(double q, double omega, double e, double xi);

/// Clamped quartic solving e^2 y'''' = xi classically.
double beam_quartic(double e, double xi, double t);

/// Largest |E-L residual| of the quartic over orbit indices 0..7 of both orbits.
double beam_max_residual(double q, double omega, double e, double xi);

std::vector<std::pair<double, double>> default_beam_sequence();

}  // namespace hahnvar
