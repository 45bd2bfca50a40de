#include "variational/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "core/errors.hpp"
#include "variational/candidate.hpp"
#include "variational/functional.hpp"

namespace hahnvar {

namespace {

constexpr double kMaxPenaltyWeight = 1e12;
constexpr double kInitialPenaltyWeight = 10.0;

struct Evaluation {
  double functional = std::numeric_limits<double>::infinity();
  double max_boundary_error = std::numeric_limits<double>::infinity();
  double penalty_sq = std::numeric_limits<double>::infinity();
  double total(double weight) const { return functional + weight * penalty_sq; }
};

// Search coordinates: the value at omega0 and, along each orbit, the
// increments y(n) - y(n+1) (the last one taken against omega0). A shift of the
// whole table is then a single coordinate, and D y at (o, n) depends on one
// increment, which keeps the search well scaled as the gaps shrink.
class Increments {
 public:
  explicit Increments(const Lattice& lattice) {
    for (Origin o : {Origin::EndA, Origin::EndB})
      lengths_.push_back(lattice.collapsed(o) ? 0u : static_cast<std::size_t>(lattice.depth() + 1));
  }

  std::vector<double> to_values(const std::vector<double>& z) const {
    std::vector<double> y(z.size());
    const double fixed = z.back();
    y.back() = fixed;
    std::size_t offset = 0;
    for (std::size_t len : lengths_) {
      double next = fixed;
      for (std::size_t n = len; n-- > 0;) {
        next += z[offset + n];
        y[offset + n] = next;
      }
      offset += len;
    }
    return y;
  }

  std::vector<double> from_values(const std::vector<double>& y) const {
    std::vector<double> z(y.size());
    const double fixed = y.back();
    z.back() = fixed;
    std::size_t offset = 0;
    for (std::size_t len : lengths_) {
      for (std::size_t n = 0; n < len; ++n)
        z[offset + n] = y[offset + n] - (n + 1 < len ? y[offset + n + 1] : fixed);
      offset += len;
    }
    return z;
  }

 private:
  std::vector<std::size_t> lengths_;
};

class Objective {
 public:
  Objective(const Problem& problem, const Lattice& lattice, const SeriesOptions& series)
      : problem_(problem), lattice_(lattice), series_(series), scratch_(lattice),
        coords_(lattice), sign_(problem.maximize ? -1.0 : 1.0) {}

  const Increments& coords() const noexcept { return coords_; }

  Evaluation operator()(const std::vector<double>& z) {
    Evaluation e;
    try {
      scratch_.assign(coords_.to_values(z));
      const Candidate y = Candidate::grid(scratch_);
      const double f = sign_ * functional_value(problem_, y, series_).value;
      double sq = 0.0;
      double worst = 0.0;
      for (int i = 0; i < problem_.r; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double ea = endpoint_derivative(lattice_, y, i, Origin::EndA) - problem_.alpha[k];
        const double eb = endpoint_derivative(lattice_, y, i, Origin::EndB) - problem_.beta[k];
        sq += ea * ea + eb * eb;
        worst = std::max({worst, std::abs(ea), std::abs(eb)});
      }
      if (std::isfinite(f) && std::isfinite(sq)) {
        e.functional = f;
        e.penalty_sq = sq;
        e.max_boundary_error = worst;
      }
    } catch (const Error&) {
      // Rejected point: leave the evaluation at +inf.
    }
    return e;
  }

 private:
  const Problem& problem_;
  const Lattice& lattice_;
  SeriesOptions series_;
  GridFunction scratch_;
  Increments coords_;
  double sign_;
};

std::vector<double> initial_guess(const Problem& problem, const Lattice& lattice,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double ya = problem.alpha[0];
  const double yb = problem.beta[0];
  auto line = [&](double t) { return ya + (yb - ya) * (t - problem.a) / (problem.b - problem.a); };
  GridFunction grid(lattice);
  for (const LatticePoint& p : lattice.points()) {
    if (lattice.at_fixed(p) && p.origin != Origin::Fixed) continue;
    grid.set(p, line(lattice.realize(p)) + 0.1 * (uniform() - 0.5));
  }
  return grid.flatten();
}

}  // namespace

MinimizeResult minimize_direct(const Problem& problem, const MinimizeOptions& options) {
  if (options.depth < 2 * problem.r + 2)
    raise(ErrorCode::InvalidArgument,
          "minimizer depth must be at least 2r + 2 = " + std::to_string(2 * problem.r + 2));
  if (options.max_iters < 0) raise(ErrorCode::InvalidArgument, "max_iters must be non-negative");
  if (!(options.initial_step > 0.0) || !(options.min_step > 0.0))
    raise(ErrorCode::InvalidArgument, "pattern-search steps must be positive");
  validate(options.series);

  const Lattice lattice = problem.lattice(options.depth);
  Objective objective(problem, lattice, options.series);

  std::vector<double> x = objective.coords().from_values(initial_guess(problem, lattice, options.seed));
  double weight = kInitialPenaltyWeight;
  Evaluation ex = objective(x);
  double fx = ex.total(weight);
  std::vector<double> steps(x.size(), options.initial_step);
  bool converged = false;

  MinimizeResult result{GridFunction(lattice), 0.0, 0.0, 0.0, 0, false, {}};
  result.history.push_back({0, fx, weight});

  int iter = 0;
  int window_iter = 0;
  double window_start = fx;
  std::vector<double> trial;
  while (iter < options.max_iters) {
    ++iter;
    const std::vector<double> base = x;
    bool improved = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      bool moved = false;
      for (double dir : {1.0, -1.0}) {
        // Walk while the objective keeps dropping, doubling the stride.
        double stride = steps[j];
        for (;;) {
          trial = x;
          trial[j] += dir * stride;
          const Evaluation et = objective(trial);
          const double ft = et.total(weight);
          if (!(ft < fx)) break;
          x.swap(trial);
          ex = et;
          fx = ft;
          moved = true;
          stride *= 2.0;
        }
        if (moved) {
          steps[j] = 0.5 * stride;
          break;
        }
      }
      if (moved)
        improved = true;
      else
        steps[j] *= 0.5;
    }
    if (improved) {
      // Pattern move along the direction of the last sweep.
      trial = x;
      for (std::size_t j = 0; j < x.size(); ++j) trial[j] += x[j] - base[j];
      const Evaluation et = objective(trial);
      if (et.total(weight) < fx) {
        x.swap(trial);
        ex = et;
        fx = et.total(weight);
      }
    }
    const double largest = *std::max_element(steps.begin(), steps.end());
    const bool collapsed = largest < options.min_step;
    bool flat = false;
    if (iter - window_iter >= options.stall_window) {
      flat = window_start - fx <= options.stall_tol * (1.0 + std::abs(fx));
      window_start = fx;
      window_iter = iter;
    }
    if (collapsed || flat) {
      if (ex.max_boundary_error <= options.boundary_tol) {
        converged = true;
      } else if (weight < kMaxPenaltyWeight) {
        weight *= 10.0;
        std::fill(steps.begin(), steps.end(), options.initial_step);
        fx = ex.total(weight);
        window_iter = iter;
        window_start = fx;
      } else {
        result.history.push_back({iter, fx, weight});
        break;
      }
    }
    result.history.push_back({iter, fx, weight});
    if (converged) break;
  }

  result.best.assign(objective.coords().to_values(x));
  result.objective = (problem.maximize ? -1.0 : 1.0) * ex.functional;
  result.max_boundary_error = ex.max_boundary_error;
  result.penalty_weight = weight;
  result.iterations = iter;
  result.converged = converged;
  return result;
}

}  // namespace hahnvar
