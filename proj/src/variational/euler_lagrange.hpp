#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/lattice.hpp"
#include "variational/candidate.hpp"
#include "variational/functional.hpp"
#include "variational/problem.hpp"

namespace hahnvar {

/// sum_i (-1)^i (1/q)^((i-1)i/2) D^i[g_i](p), g_i = partial_{i+2}L along the
/// trajectory of y on `lattice`. Off omega0 the stencil needs p.n + 2r <= depth;
/// at omega0 the value is the orbit limit of the surrounding residuals.
double el_residual(const Problem& problem, const Lattice& lattice, const Candidate& y,
                   const LatticePoint& p);
/// On the problem's own lattice with the given depth.
double el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p,
                   int depth = kDefaultDepth);

/// r = 1 only: D[partial_3 L](p) - partial_2 L(p), written out directly.
double el_residual_first_order(const Problem& problem, const Lattice& lattice, const Candidate& y,
                               const LatticePoint& p);

/// Same sum with sigma(t) = qt (omega treated as 0) on {aq^n} u {bq^n} u {0}.
double q_el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p,
                     int depth = kDefaultDepth);
/// Same sum with q treated as 1 and step h = omega on {a + nh} u {b + nh}.
double h_el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p,
                     int depth = kDefaultDepth);

struct ElReport {
  std::vector<std::pair<LatticePoint, double>> residuals;
  double max_abs_residual = 0.0;
  std::vector<BoundaryViolation> boundary_violations;
  /// Largest orbit index at which a residual was evaluated.
  int depth_used = -1;
  bool omega0_included = false;
  std::optional<double> omega0_residual;
  double tol = 0.0;

  /// The omega0 residual, when present, is held to 100 * tol.
  bool omega0_passes() const;
  bool passes() const;
};

ElReport el_report(const Problem& problem, const Candidate& y, int depth, double tol = 1e-9,
                   bool include_omega0 = false);

}  // namespace hahnvar
