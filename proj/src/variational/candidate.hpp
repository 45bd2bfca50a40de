#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "core/lattice.hpp"
#include "core/lattice_ops.hpp"
#include "core/operators.hpp"
#include "dsl/expr.hpp"

namespace hahnvar {

/// A trial function y for a problem: a closed-form function of t, a table of
/// lattice values, or a built-in. Immutable; copies share state.
class Candidate {
 public:
  static Candidate function(RealFunction f, std::string label = "function");
  /// Expression in t only.
  static Candidate expression(const dsl::Expr& expr);
  static Candidate expression(std::string_view text);
  static Candidate grid(GridFunction values);
  /// "ystar": the discontinuous minimizer, -t except 0 at t = -1 and 1 at
  /// t = 0. "zero": y = 0.
  static Candidate builtin(std::string_view name);

  /// y + scale * other, pointwise on the lattice.
  static Candidate combine(const Candidate& y, double scale, const Candidate& other);

  double value(const Lattice& lattice, const LatticePoint& p) const;
  /// Largest orbit index with a value, when bounded (tables).
  std::optional<int> max_index() const noexcept { return max_index_; }
  const std::string& label() const noexcept { return label_; }
  /// The table behind a grid candidate, else null.
  const GridFunction* grid_function() const noexcept { return grid_.get(); }

  PointFunction on(const Lattice& lattice) const;

 private:
  using Sampler = std::function<double(const Lattice&, const LatticePoint&)>;
  Candidate(Sampler sampler, std::optional<int> max_index, std::string label,
            std::shared_ptr<const GridFunction> grid = nullptr);

  Sampler sampler_;
  std::optional<int> max_index_;
  std::string label_;
  std::shared_ptr<const GridFunction> grid_;
};

double ystar(double t) noexcept;

}  // namespace hahnvar
