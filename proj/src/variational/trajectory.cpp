#include "variational/trajectory.hpp"

#include <string>

#include "core/errors.hpp"

namespace hahnvar {

std::vector<double> shifted_derivatives(const Lattice& lattice, int r, const PointFunction& f,
                                        const LatticePoint& p, std::optional<int> max_index) {
  std::vector<double> v(static_cast<std::size_t>(r) + 1);
  if (lattice.at_fixed(p)) {
    v[0] = f(LatticePoint::fixed());
    std::optional<int> limit_index;
    if (max_index) limit_index = *max_index - r;
    for (int i = 1; i <= r; ++i) {
      v[static_cast<std::size_t>(i)] = orbit_limit(
          lattice,
          [&](const LatticePoint& s) {
            return shifted_derivatives(lattice, r, f, s)[static_cast<std::size_t>(i)];
          },
          limit_index);
    }
    return v;
  }
  if (max_index && p.n + r > *max_index)
    raise(ErrorCode::InsufficientDepth, "stencil at " + to_string(p) + " needs index " +
                                            std::to_string(p.n + r) + " but the table stops at " +
                                            std::to_string(*max_index));
  std::vector<double> values(static_cast<std::size_t>(r) + 1);
  for (int m = 0; m <= r; ++m) values[static_cast<std::size_t>(m)] = f(p.shifted(m));
  for (int i = 0; i <= r; ++i) {
    const std::span<const double> tail(values.data() + (r - i), static_cast<std::size_t>(i) + 1);
    v[static_cast<std::size_t>(i)] = stencil_derivative(lattice, p, tail, i);
  }
  return v;
}

TrajectoryEvaluator::TrajectoryEvaluator(const Problem& problem, const Lattice& lattice,
                                         const Candidate& y)
    : problem_(problem), lattice_(lattice), y_(y), sampler_(y.on(lattice)) {}

std::optional<int> TrajectoryEvaluator::trajectory_limit() const {
  if (!y_.max_index()) return std::nullopt;
  return *y_.max_index() - problem_.r;
}

std::vector<double> TrajectoryEvaluator::trajectory(const LatticePoint& p) const {
  const std::vector<double> v =
      shifted_derivatives(lattice_, problem_.r, sampler_, p, y_.max_index());
  std::vector<double> args;
  args.reserve(v.size() + 1);
  args.push_back(lattice_.realize(p));
  args.insert(args.end(), v.begin(), v.end());
  return args;
}

double TrajectoryEvaluator::integrand(const LatticePoint& p) const {
  return problem_.lagrangian(trajectory(p));
}

std::vector<double> TrajectoryEvaluator::partials(const LatticePoint& p) const {
  const std::vector<double> args = trajectory(p);
  std::vector<double> g(static_cast<std::size_t>(problem_.r) + 1);
  for (int i = 0; i <= problem_.r; ++i)
    g[static_cast<std::size_t>(i)] = problem_.lagrangian.partial_u(args, i);
  return g;
}

}  // namespace hahnvar
