#include "variational/euler_lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/lattice_ops.hpp"
#include "variational/trajectory.hpp"

namespace hahnvar {

namespace {

// Last orbit index whose residual stencil fits both the lattice and the table.
int residual_limit(const Problem& problem, const Lattice& lattice, const Candidate& y) {
  int limit = lattice.depth() - 2 * problem.r;
  if (y.max_index()) limit = std::min(limit, *y.max_index() - 2 * problem.r);
  return limit;
}

double residual_off_fixed(const Problem& problem, const Lattice& lattice,
                          const TrajectoryEvaluator& eval, const LatticePoint& p) {
  const int r = problem.r;
  std::vector<std::vector<double>> g(static_cast<std::size_t>(r) + 1);
  for (int m = 0; m <= r; ++m) g[static_cast<std::size_t>(m)] = eval.partials(p.shifted(m));
  const double inv_q = 1.0 / lattice.q();
  double sum = 0.0;
  std::vector<double> column;
  for (int i = 0; i <= r; ++i) {
    column.clear();
    for (int m = 0; m <= i; ++m)
      column.push_back(g[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]);
    const double di = stencil_derivative(lattice, p, column, i);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(inv_q, 0.5 * (i - 1) * i) * di;
  }
  return sum;
}

}  // namespace

double el_residual(const Problem& problem, const Lattice& lattice, const Candidate& y,
                   const LatticePoint& p) {
  const TrajectoryEvaluator eval(problem, lattice, y);
  const int limit = residual_limit(problem, lattice, y);
  if (lattice.at_fixed(p)) {
    if (limit < 0)
      raise(ErrorCode::InsufficientDepth, "no room for residual stencils near omega0");
    return orbit_limit(
        lattice, [&](const LatticePoint& s) { return residual_off_fixed(problem, lattice, eval, s); },
        limit);
  }
  if (p.n < 0 || p.n > limit)
    raise(ErrorCode::InsufficientDepth,
          "residual at " + to_string(p) + " needs orbit index " +
              std::to_string(p.n + 2 * problem.r) + " but depth is " +
              std::to_string(lattice.depth()));
  return residual_off_fixed(problem, lattice, eval, p);
}

double el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p, int depth) {
  return el_residual(problem, problem.lattice(depth), y, p);
}

double el_residual_first_order(const Problem& problem, const Lattice& lattice, const Candidate& y,
                               const LatticePoint& p) {
  if (problem.r != 1) raise(ErrorCode::InvalidArgument, "first-order form needs r = 1");
  if (lattice.at_fixed(p)) raise(ErrorCode::InvalidArgument, "first-order form is off omega0 only");
  const PointFunction f = y.on(lattice);
  auto args_at = [&](const LatticePoint& s) {
    const double y1 = f(s.shifted(1));
    const double dy = (y1 - f(s)) / lattice.step(s);
    return std::vector<double>{lattice.realize(s), y1, dy};
  };
  const std::vector<double> here = args_at(p);
  const std::vector<double> next = args_at(p.shifted(1));
  const double d_partial3 =
      (problem.lagrangian.partial_u(next, 1) - problem.lagrangian.partial_u(here, 1)) /
      lattice.step(p);
  return d_partial3 - problem.lagrangian.partial_u(here, 0);
}

double q_el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p, int depth) {
  const Lattice lattice = Lattice::jackson(problem.params.q(), problem.a, problem.b, depth);
  return el_residual(problem, lattice, y, p);
}

double h_el_residual(const Problem& problem, const Candidate& y, const LatticePoint& p, int depth) {
  const Lattice lattice = Lattice::forward(problem.params.omega(), problem.a, problem.b, depth);
  return el_residual(problem, lattice, y, p);
}

bool ElReport::omega0_passes() const {
  return !omega0_residual || std::abs(*omega0_residual) <= 100.0 * tol;
}

bool ElReport::passes() const {
  return max_abs_residual <= tol && boundary_violations.empty() && omega0_passes();
}

ElReport el_report(const Problem& problem, const Candidate& y, int depth, double tol,
                   bool include_omega0) {
  if (!(tol >= 0.0)) raise(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  Lattice lattice = problem.lattice(depth);
  if (const GridFunction* g = y.grid_function()) lattice = g->lattice().with_depth(depth);
  const int limit = residual_limit(problem, lattice, y);
  if (limit < 0)
    raise(ErrorCode::InsufficientDepth, "depth " + std::to_string(depth) +
                                            " leaves no point with a full residual stencil");
  ElReport report;
  report.tol = tol;
  report.depth_used = limit;
  report.omega0_included = include_omega0;
  const TrajectoryEvaluator eval(problem, lattice, y);
  for (Origin o : lattice.live_orbits()) {
    for (int n = 0; n <= limit; ++n) {
      const LatticePoint p{o, n};
      const double res = residual_off_fixed(problem, lattice, eval, p);
      report.residuals.emplace_back(p, res);
      report.max_abs_residual = std::max(report.max_abs_residual, std::abs(res));
    }
  }
  if (include_omega0 && lattice.has_fixed())
    report.omega0_residual = el_residual(problem, lattice, y, LatticePoint::fixed());
  report.boundary_violations = is_admissible(problem, y, tol).violations;
  return report;
}

}  // namespace hahnvar
