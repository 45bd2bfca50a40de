#pragma once

#include <cstdint>
#include <vector>

#include "core/lattice_ops.hpp"
#include "core/series.hpp"
#include "variational/problem.hpp"

namespace hahnvar {

struct MinimizeOptions {
  int depth = 12;
  std::uint64_t seed = 0;
  int max_iters = 5000;
  SeriesOptions series{};
  /// Boundary conditions count as met below this error.
  double boundary_tol = 1e-8;
  double initial_step = 0.25;
  double min_step = 1e-10;
  /// A stall is a window of this many iterations whose total decrease is at
  /// most stall_tol * (1 + |objective|), or every step below min_step.
  int stall_window = 50;
  double stall_tol = 1e-12;
};

struct HistoryEntry {
  int iteration;
  /// Functional plus penalty at the current iterate.
  double objective;
  double penalty_weight;
};

struct MinimizeResult {
  GridFunction best;
  /// Functional value of `best` (sign of a maximization undone).
  double objective = 0.0;
  double max_boundary_error = 0.0;
  double penalty_weight = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<HistoryEntry> history;
};

/// Coordinate pattern search over the free lattice values of y, with the
/// boundary data held by a quadratic penalty whose weight grows tenfold each
/// time the search stalls while a condition is still violated. Deterministic
/// given the seed; history is non-increasing within each penalty weight.
MinimizeResult minimize_direct(const Problem& problem, const MinimizeOptions& options);

}  // namespace hahnvar
