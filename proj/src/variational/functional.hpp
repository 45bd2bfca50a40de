#pragma once

#include <vector>

#include "core/lattice.hpp"
#include "core/series.hpp"
#include "variational/candidate.hpp"
#include "variational/problem.hpp"

namespace hahnvar {

struct BoundaryViolation {
  int index;       // condition D^index y at the endpoint
  Origin endpoint; // EndA or EndB
  double error;    // |D^index y(endpoint) - target|
};

struct BoundaryCheck {
  bool ok = true;
  std::vector<BoundaryViolation> violations;
};

/// D^i y at an endpoint, i < r, on `lattice`.
double endpoint_derivative(const Lattice& lattice, const Candidate& y, int i, Origin endpoint);

BoundaryCheck is_admissible(const Problem& problem, const Candidate& y, double tol = 1e-9);
BoundaryCheck is_variation(const Problem& problem, const Candidate& eta, double tol = 1e-9);

/// Lattice depth used for closed-form candidates; only the stencil size matters.
inline constexpr int kDefaultDepth = 40;

SeriesResult functional_value(const Problem& problem, const Candidate& y,
                              const SeriesOptions& options = {});

/// Integral of sum_i partial_{i+2}L * D^i[eta o sigma^(r-i)]. Raises
/// NotAVariation when eta fails the zero boundary data.
SeriesResult first_variation(const Problem& problem, const Candidate& y, const Candidate& eta,
                             const SeriesOptions& options = {}, double variation_tol = 1e-9);

/// Central difference (L[y + eps eta] - L[y - eps eta]) / (2 eps), summed as one series.
double first_variation_fd(const Problem& problem, const Candidate& y, const Candidate& eta,
                          double eps = 1e-5, const SeriesOptions& options = {});

}  // namespace hahnvar
