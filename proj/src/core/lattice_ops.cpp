#include "core/lattice_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace hahnvar {

namespace {

std::size_t orbit_size(const Lattice& lattice, Origin o) {
  return lattice.collapsed(o) ? 0u : static_cast<std::size_t>(lattice.depth() + 1);
}

}  // namespace

GridFunction::GridFunction(Lattice lattice, std::vector<double> a_values,
                           std::vector<double> b_values, double value_at_fixed)
    : lattice_(std::move(lattice)),
      a_(std::move(a_values)),
      b_(std::move(b_values)),
      fixed_(value_at_fixed) {
  if (a_.size() != orbit_size(lattice_, Origin::EndA) ||
      b_.size() != orbit_size(lattice_, Origin::EndB))
    raise(ErrorCode::InvalidArgument,
          "grid function needs one value per orbit point up to the lattice depth");
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(a_.begin(), a_.end(), finite) || !std::all_of(b_.begin(), b_.end(), finite) ||
      !std::isfinite(fixed_))
    raise(ErrorCode::NonFiniteValue, "grid function values must be finite");
}

GridFunction::GridFunction(Lattice lattice)
    : lattice_(std::move(lattice)),
      a_(orbit_size(lattice_, Origin::EndA), 0.0),
      b_(orbit_size(lattice_, Origin::EndB), 0.0) {}

GridFunction GridFunction::sample(const Lattice& lattice, const RealFunction& f) {
  GridFunction out(lattice);
  for (const LatticePoint& p : lattice.points()) out.set(p, f(lattice.realize(p)));
  return out;
}

double GridFunction::at(const LatticePoint& p) const {
  if (lattice_.at_fixed(p)) return fixed_;
  if (p.n < 0 || p.n > lattice_.depth())
    raise(ErrorCode::InsufficientDepth, "grid function has no value at " + to_string(p) +
                                            " (depth " + std::to_string(lattice_.depth()) + ")");
  return p.origin == Origin::EndA ? a_[static_cast<std::size_t>(p.n)]
                                  : b_[static_cast<std::size_t>(p.n)];
}

void GridFunction::set(const LatticePoint& p, double value) {
  if (!std::isfinite(value)) raise(ErrorCode::NonFiniteValue, "grid values must be finite");
  if (lattice_.at_fixed(p)) {
    fixed_ = value;
    return;
  }
  if (p.n < 0 || p.n > lattice_.depth())
    raise(ErrorCode::InsufficientDepth, "point " + to_string(p) + " is beyond the grid depth");
  (p.origin == Origin::EndA ? a_ : b_)[static_cast<std::size_t>(p.n)] = value;
}

PointFunction GridFunction::as_point_function() const {
  return [this](const LatticePoint& p) { return at(p); };
}

std::vector<double> GridFunction::flatten() const {
  std::vector<double> out(a_);
  out.insert(out.end(), b_.begin(), b_.end());
  out.push_back(fixed_);
  return out;
}

void GridFunction::assign(std::span<const double> flat) {
  if (flat.size() != size()) raise(ErrorCode::InvalidArgument, "flat grid size mismatch");
  std::copy_n(flat.begin(), a_.size(), a_.begin());
  std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(a_.size()), b_.size(), b_.begin());
  fixed_ = flat.back();
}

std::size_t GridFunction::size() const noexcept { return a_.size() + b_.size() + 1; }

double stencil_derivative(const Lattice& lattice, LatticePoint base, std::span<const double> values,
                          int order) {
  if (order < 0) raise(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  if (values.size() < static_cast<std::size_t>(order) + 1)
    raise(ErrorCode::InvalidArgument, "stencil needs order + 1 values");
  std::vector<double> d(values.begin(), values.begin() + order + 1);
  for (int level = 1; level <= order; ++level)
    for (int m = 0; m + level <= order; ++m)
      d[static_cast<std::size_t>(m)] =
          (d[static_cast<std::size_t>(m) + 1] - d[static_cast<std::size_t>(m)]) /
          lattice.step(base.shifted(m));
  return d[0];
}

double lattice_derivative(const Lattice& lattice, const PointFunction& f, int order,
                          const LatticePoint& p) {
  if (lattice.at_fixed(p))
    raise(ErrorCode::InvalidArgument, "stencil derivative requested at the fixed point");
  std::vector<double> values(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) values[static_cast<std::size_t>(m)] = f(p.shifted(m));
  return stencil_derivative(lattice, p, values, order);
}

double orbit_limit(const Lattice& lattice, const PointFunction& g, std::optional<int> max_index) {
  if (!lattice.has_fixed()) raise(ErrorCode::InvalidArgument, "lattice has no fixed point");
  const std::vector<Origin> live = lattice.live_orbits();
  if (live.empty()) raise(ErrorCode::InvalidArgument, "no orbit approaches the fixed point");
  const Origin o = live.front();
  const double q = lattice.q();
  const double w0 = lattice.fixed_point();
  const double gap = std::abs(lattice.endpoint(o) - w0);
  const double target = 1e-3 * std::max(1.0, std::abs(w0));
  int n = 0;
  if (gap > target) n = static_cast<int>(std::ceil(std::log(target / gap) / std::log(q)));
  if (max_index) {
    if (*max_index < 0)
      raise(ErrorCode::InsufficientDepth, "no orbit samples available for the limit at omega0");
    n = std::min(n, std::max(0, *max_index - 2));
  }
  const int available = max_index ? *max_index - n : 2;
  const double s0 = g({o, n});
  if (available < 1) return s0;
  const double s1 = g({o, n + 1});
  const double l1 = (s1 - q * s0) / (1.0 - q);
  if (available < 2) return l1;
  const double s2 = g({o, n + 2});
  const double l2 = (s2 - q * s1) / (1.0 - q);
  return (l2 - q * q * l1) / (1.0 - q * q);
}

double hahn_derivative_n(const GridFunction& y, int r, const LatticePoint& p) {
  if (r < 0) raise(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  const Lattice& lattice = y.lattice();
  const PointFunction f = y.as_point_function();
  if (r == 0) return y.at(p);
  if (lattice.at_fixed(p)) {
    return orbit_limit(
        lattice, [&](const LatticePoint& s) { return lattice_derivative(lattice, f, r, s); },
        y.depth() - r);
  }
  if (p.n + r > y.depth())
    raise(ErrorCode::InsufficientDepth, "D^" + std::to_string(r) + " at " + to_string(p) +
                                            " needs depth " + std::to_string(p.n + r));
  return lattice_derivative(lattice, f, r, p);
}

double norm_r_inf(const HahnParams& params, const GridFunction& y, int r) {
  const Lattice& lattice = y.lattice();
  if (lattice.kind() != Lattice::Kind::Hahn || lattice.q() != params.q() ||
      lattice.omega() != params.omega())
    raise(ErrorCode::InvalidArgument, "grid function lives on a different lattice");
  if (r < 0) raise(ErrorCode::InvalidArgument, "norm order must be non-negative");
  if (y.depth() < r + 1)
    raise(ErrorCode::InsufficientDepth, "norm of order " + std::to_string(r) +
                                            " needs lattice depth >= " + std::to_string(r + 1));
  double total = 0.0;
  for (int i = 0; i <= r; ++i) {
    double sup = 0.0;
    for (const LatticePoint& p : lattice.points()) {
      if (!lattice.at_fixed(p) && p.n + i > y.depth()) continue;
      sup = std::max(sup, std::abs(hahn_derivative_n(y, i, p)));
    }
    total += sup;
  }
  return total;
}

SeriesResult lattice_integral(const Lattice& lattice, const PointFunction& g,
                              const SeriesOptions& options, std::optional<int> max_index,
                              const std::function<double()>& value_at_fixed) {
  if (lattice.kind() == Lattice::Kind::Forward)
    raise(ErrorCode::InvalidArgument, "use norlund_sum on the forward lattice");
  validate(options);
  std::optional<TailClosure> closure;
  if (max_index) {
    if (!value_at_fixed)
      raise(ErrorCode::InvalidArgument, "a bounded sampler needs the value at omega0");
    closure = TailClosure{*max_index, value_at_fixed};
  }
  auto one_side = [&](Origin o) -> SeriesResult {
    const double prefactor = lattice.integral_prefactor(o);
    if (prefactor == 0.0) return {};
    return weighted_series(
        prefactor, lattice.q(), [&](int k) { return g({o, k}); }, options, closure);
  };
  return one_side(Origin::EndB) - one_side(Origin::EndA);
}

}  // namespace hahnvar
