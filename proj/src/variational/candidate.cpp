#include "variational/candidate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "core/errors.hpp"

namespace hahnvar {

double ystar(double t) noexcept {
  if (t == -1.0) return 0.0;
  if (t == 0.0) return 1.0;
  return -t;
}

Candidate::Candidate(Sampler sampler, std::optional<int> max_index, std::string label,
                     std::shared_ptr<const GridFunction> grid)
    : sampler_(std::move(sampler)),
      max_index_(max_index),
      label_(std::move(label)),
      grid_(std::move(grid)) {}

Candidate Candidate::function(RealFunction f, std::string label) {
  return Candidate(
      [f = std::move(f)](const Lattice& lattice, const LatticePoint& p) {
        return f(lattice.realize(p));
      },
      std::nullopt, std::move(label));
}

Candidate Candidate::expression(const dsl::Expr& expr) {
  if (expr.max_u_index() >= 0)
    raise(ErrorCode::UnknownIdentifier, "candidate expressions may only use t");
  return function(
      [expr](double t) {
        const std::array<double, 1> slots{t};
        return dsl::evaluate(expr, slots);
      },
      expr.to_string());
}

Candidate Candidate::expression(std::string_view text) { return expression(dsl::parse(text)); }

Candidate Candidate::grid(GridFunction values) {
  auto shared = std::make_shared<const GridFunction>(std::move(values));
  const int depth = shared->depth();
  const GridFunction* raw = shared.get();
  return Candidate(
      [raw](const Lattice& lattice, const LatticePoint& p) {
        if (!lattice.same_geometry(raw->lattice()))
          raise(ErrorCode::InvalidArgument, "grid candidate evaluated on a foreign lattice");
        return raw->at(p);
      },
      depth, "table", shared);
}

Candidate Candidate::builtin(std::string_view name) {
  if (name == "ystar") return function(ystar, "ystar");
  if (name == "zero") return function([](double) { return 0.0; }, "zero");
  raise(ErrorCode::InvalidArgument, "unknown built-in candidate '" + std::string(name) + "'");
}

Candidate Candidate::combine(const Candidate& y, double scale, const Candidate& other) {
  std::optional<int> bound = y.max_index_;
  if (other.max_index_) bound = bound ? std::min(*bound, *other.max_index_) : other.max_index_;
  return Candidate(
      [y, scale, other](const Lattice& lattice, const LatticePoint& p) {
        return y.value(lattice, p) + scale * other.value(lattice, p);
      },
      bound, y.label_ + " + eps*" + other.label_);
}

double Candidate::value(const Lattice& lattice, const LatticePoint& p) const {
  const double v = sampler_(lattice, lattice.canonical(p));
  if (!std::isfinite(v))
    raise(ErrorCode::NonFiniteValue, "candidate '" + label_ + "' is not finite at " + to_string(p));
  return v;
}

PointFunction Candidate::on(const Lattice& lattice) const {
  return [this, &lattice](const LatticePoint& p) { return value(lattice, p); };
}

}  // namespace hahnvar
