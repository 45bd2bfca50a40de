#include "variational/demos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "core/errors.hpp"
#include "variational/candidate.hpp"
#include "variational/functional.hpp"

namespace hahnvar {

namespace {

double endpoint_value(const Lattice& lattice, const GridFunction& grid, int i, Origin o) {
  return endpoint_derivative(lattice, Candidate::grid(grid), i, o);
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

GridFunction random_admissible_grid(const Problem& problem, const Lattice& lattice,
                                    std::mt19937_64& rng) {
  auto uniform = [&rng] { return -2.0 + 4.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  GridFunction grid(lattice);
  const double centre = lattice.has_fixed() ? uniform() : 0.0;
  for (const LatticePoint& p : lattice.points()) {
    if (lattice.at_fixed(p)) {
      if (p.origin == Origin::Fixed) grid.set(p, centre);
      continue;
    }
    const double scale = lattice.has_fixed() ? std::abs(lattice.realize(p) - lattice.fixed_point())
                                             : 1.0;
    grid.set(p, centre + scale * uniform());
  }
  for (Origin o : {Origin::EndA, Origin::EndB}) {
    const std::vector<double>& target = o == Origin::EndA ? problem.alpha : problem.beta;
    if (lattice.collapsed(o)) {
      grid.set(LatticePoint::fixed(), target[0]);
      continue;
    }
    for (int i = 0; i < problem.r; ++i) {
      const LatticePoint p{o, i};
      const double v = grid.at(p);
      const double d0 = endpoint_value(lattice, grid, i, o);
      grid.set(p, v + 1.0);
      const double slope = endpoint_value(lattice, grid, i, o) - d0;
      grid.set(p, v + (target[static_cast<std::size_t>(i)] - d0) / slope);
    }
  }
  return grid;
}

NonnegativitySweep nonnegativity_sweep(const Problem& problem, int count, std::uint64_t seed,
                                       int depth, const SeriesOptions& options) {
  if (count < 1) raise(ErrorCode::InvalidArgument, "sweep needs at least one sample");
  std::mt19937_64 rng(seed);
  const Lattice lattice = problem.lattice(depth);
  NonnegativitySweep sweep;
  sweep.count = count;
  sweep.min_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k < count; ++k) {
    const Candidate y = Candidate::grid(random_admissible_grid(problem, lattice, rng));
    const double v = functional_value(problem, y, options).value;
    sweep.min_value = std::min(sweep.min_value, v);
    if (v < -1e-10) ++sweep.negative;
  }
  return sweep;
}

DiscontinuousExample run_discontinuous_example(int depth, double tol, std::uint64_t seed, bool include_omega0) {
  const Problem problem = discontinuous_minimizer_problem();
  const Candidate y = Candidate::builtin("ystar");
  SeriesOptions options;
  return DiscontinuousExample{functional_value(problem, y, options),
                      el_report(problem, y, depth, tol, include_omega0),
                      nonnegativity_sweep(problem, 100, seed, 20, options)};
}

Problem beam_problem(double q, double omega, double e, double xi) {
  const std::string lagrangian = "0.5*(" + number(e) + "*u2)^2 - " + number(xi) + "*u0";
  return make_problem(q, omega, 2, 0.0, 2.0, {0.0, 0.0}, {0.0, 0.0}, lagrangian);
}

double beam_quartic(double e, double xi, double t) {
  const double s = t * (2.0 - t);
  return xi / (24.0 * e * e) * s * s;
}

double beam_max_residual(double q, double omega, double e, double xi) {
  constexpr int kPoints = 8;
  const Problem problem = beam_problem(q, omega, e, xi);
  const Candidate y =
      Candidate::function([e, xi](double t) { return beam_quartic(e, xi, t); }, "quartic");
  const Lattice lattice = problem.lattice(kPoints - 1 + 2 * problem.r);
  double worst = 0.0;
  for (Origin o : lattice.live_orbits())
    for (int n = 0; n < kPoints; ++n)
      worst = std::max(worst, std::abs(el_residual(problem, lattice, y, {o, n})));
  return worst;
}

std::vector<std::pair<double, double>> default_beam_sequence() {
  return {{0.9, 0.1}, {0.99, 0.01}, {0.999, 0.001}};
}

}  // namespace hahnvar
