#include "variational/functional.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "core/errors.hpp"
#include "core/lattice_ops.hpp"
#include "variational/trajectory.hpp"

namespace hahnvar {

namespace {

Lattice working_lattice(const Problem& problem, const Candidate& y) {
  const Lattice base = problem.lattice(kDefaultDepth);
  if (const GridFunction* g = y.grid_function()) {
    if (!g->lattice().same_geometry(base))
      raise(ErrorCode::InvalidArgument, "table candidate lives on a different lattice");
    return g->lattice();
  }
  return base;
}

BoundaryCheck check_boundary(const Problem& problem, const Candidate& y,
                             const std::vector<double>& alpha, const std::vector<double>& beta,
                             double tol) {
  const Lattice lattice = working_lattice(problem, y);
  BoundaryCheck check;
  for (int i = 0; i < problem.r; ++i) {
    const double ta = alpha[static_cast<std::size_t>(i)];
    const double tb = beta[static_cast<std::size_t>(i)];
    const double ea = std::abs(endpoint_derivative(lattice, y, i, Origin::EndA) - ta);
    const double eb = std::abs(endpoint_derivative(lattice, y, i, Origin::EndB) - tb);
    if (!(ea <= tol)) check.violations.push_back({i, Origin::EndA, ea});
    if (!(eb <= tol)) check.violations.push_back({i, Origin::EndB, eb});
  }
  check.ok = check.violations.empty();
  return check;
}

std::optional<int> min_bound(std::optional<int> x, std::optional<int> y) {
  if (!x) return y;
  if (!y) return x;
  return std::min(*x, *y);
}

/// Closed-form candidates can be sampled at any depth, but stencil quotients
/// lose all precision once orbit gaps shrink toward rounding level. Past a
/// gap of 1e-16^(1/(r+1)) the integrand is taken as its value at omega0; the
/// error this trades for is of order gap^2.
PointFunction resolved(const Lattice& lattice, int r, PointFunction g) {
  const double w0 = lattice.fixed_point();
  const double cutoff = (1.0 + std::abs(w0)) * std::pow(1e-16, 1.0 / (r + 1));
  auto fixed = std::make_shared<std::optional<double>>();
  return [&lattice, w0, cutoff, fixed, g = std::move(g)](const LatticePoint& p) {
    if (!lattice.at_fixed(p) &&
        std::pow(lattice.q(), p.n) * std::abs(lattice.endpoint(p.origin) - w0) >= cutoff)
      return g(p);
    if (!*fixed) *fixed = g(LatticePoint::fixed());
    return **fixed;
  };
}

}  // namespace

double endpoint_derivative(const Lattice& lattice, const Candidate& y, int i, Origin endpoint) {
  const LatticePoint p{endpoint, 0};
  return shifted_derivatives(lattice, i, y.on(lattice), p, y.max_index())
      [static_cast<std::size_t>(i)];
}

BoundaryCheck is_admissible(const Problem& problem, const Candidate& y, double tol) {
  return check_boundary(problem, y, problem.alpha, problem.beta, tol);
}

BoundaryCheck is_variation(const Problem& problem, const Candidate& eta, double tol) {
  const std::vector<double> zeros(static_cast<std::size_t>(problem.r), 0.0);
  return check_boundary(problem, eta, zeros, zeros, tol);
}

SeriesResult functional_value(const Problem& problem, const Candidate& y,
                              const SeriesOptions& options) {
  const Lattice lattice = working_lattice(problem, y);
  const TrajectoryEvaluator eval(problem, lattice, y);
  const PointFunction integrand = [&](const LatticePoint& p) { return eval.integrand(p); };
  if (!y.max_index())
    return lattice_integral(lattice, resolved(lattice, problem.r, integrand), options);
  return lattice_integral(lattice, integrand, options, eval.trajectory_limit(),
                          [&] { return eval.integrand(LatticePoint::fixed()); });
}

SeriesResult first_variation(const Problem& problem, const Candidate& y, const Candidate& eta,
                             const SeriesOptions& options, double variation_tol) {
  const BoundaryCheck check = is_variation(problem, eta, variation_tol);
  if (!check.ok) {
    const BoundaryViolation& v = check.violations.front();
    raise(ErrorCode::NotAVariation, "eta is not a variation: D^" + std::to_string(v.index) +
                                        " eta(" + to_string(v.endpoint) + ") has magnitude " +
                                        std::to_string(v.error));
  }
  Lattice lattice = working_lattice(problem, y);
  if (eta.grid_function() && !y.grid_function()) lattice = working_lattice(problem, eta);
  const TrajectoryEvaluator eval(problem, lattice, y);
  const std::optional<int> bound = min_bound(y.max_index(), eta.max_index());
  const PointFunction eta_at = eta.on(lattice);
  const PointFunction integrand = [&](const LatticePoint& p) {
    const std::vector<double> g = eval.partials(p);
    const std::vector<double> w = shifted_derivatives(lattice, problem.r, eta_at, p, bound);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * w[i];
    return s;
  };
  if (!bound)
    return lattice_integral(lattice, resolved(lattice, problem.r, integrand), options);
  return lattice_integral(lattice, integrand, options, *bound - problem.r,
                          [&] { return integrand(LatticePoint::fixed()); });
}

double first_variation_fd(const Problem& problem, const Candidate& y, const Candidate& eta,
                          double eps, const SeriesOptions& options) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    raise(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  Lattice lattice = working_lattice(problem, y);
  if (eta.grid_function() && !y.grid_function()) lattice = working_lattice(problem, eta);
  const TrajectoryEvaluator ey(problem, lattice, y);
  const TrajectoryEvaluator ee(problem, lattice, eta);
  const std::optional<int> bound = min_bound(y.max_index(), eta.max_index());
  // The trajectory is linear in y, so the perturbed one is assembled from the
  // two unperturbed ones. Rounding in the stencils of y then cancels in the
  // central difference instead of being amplified by 1/eps. Both signs share
  // one series so they also share its truncation.
  const PointFunction integrand = [&](const LatticePoint& p) {
    const std::vector<double> vy = ey.trajectory(p);
    const std::vector<double> ve = ee.trajectory(p);
    std::vector<double> plus = vy, minus = vy;
    for (std::size_t i = 1; i < vy.size(); ++i) {
      plus[i] += eps * ve[i];
      minus[i] -= eps * ve[i];
    }
    return (problem.lagrangian(plus) - problem.lagrangian(minus)) / (2.0 * eps);
  };
  if (!bound)
    return lattice_integral(lattice, resolved(lattice, problem.r, integrand), options).value;
  return lattice_integral(lattice, integrand, options, *bound - problem.r,
                          [&] { return integrand(LatticePoint::fixed()); })
      .value;
}

}  // namespace hahnvar
