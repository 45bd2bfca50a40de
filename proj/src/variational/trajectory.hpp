#pragma once

#include <optional>
#include <vector>

#include "core/lattice.hpp"
#include "core/lattice_ops.hpp"
#include "variational/candidate.hpp"
#include "variational/problem.hpp"

namespace hahnvar {

/// (v_0, ..., v_r) with v_i = D^i[f o sigma^(r-i)](p). Composition with
/// sigma^k is the index shift n -> n + k, so the stencil reads f at
/// p, p+1, ..., p+r. At omega0, v_0 = f(omega0) and the higher entries are
/// orbit limits; `max_index` bounds the available samples of f.
std::vector<double> shifted_derivatives(const Lattice& lattice, int r, const PointFunction& f,
                                        const LatticePoint& p,
                                        std::optional<int> max_index = std::nullopt);

/// Evaluation of a problem's integrand and partials along a candidate on a
/// fixed lattice. Holds references; the arguments must outlive it.
class TrajectoryEvaluator {
 public:
  TrajectoryEvaluator(const Problem& problem, const Lattice& lattice, const Candidate& y);

  int order() const noexcept { return problem_.r; }
  const Lattice& lattice() const noexcept { return lattice_; }

  /// Largest orbit index where the full stencil of order r is available.
  std::optional<int> trajectory_limit() const;

  /// (t, v_0, ..., v_r): the argument list of L at p.
  std::vector<double> trajectory(const LatticePoint& p) const;
  double integrand(const LatticePoint& p) const;
  /// g_i = partial_{i+2} L along the trajectory, i = 0..r.
  std::vector<double> partials(const LatticePoint& p) const;

 private:
  const Problem& problem_;
  const Lattice& lattice_;
  const Candidate& y_;
  PointFunction sampler_;
};

}  // namespace hahnvar
