#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/lattice.hpp"
#include "core/operators.hpp"
#include "core/series.hpp"

namespace hahnvar {

/// A real function known only through its values at lattice points.
using PointFunction = std::function<double(const LatticePoint&)>;

/// Values attached to every point of a truncated lattice. Orbits that
/// collapse onto omega0 carry no storage of their own and read the fixed
/// value.
class GridFunction {
 public:
  GridFunction(Lattice lattice, std::vector<double> a_values, std::vector<double> b_values,
               double value_at_fixed);
  /// Zero-filled grid on `lattice`.
  explicit GridFunction(Lattice lattice);
  static GridFunction sample(const Lattice& lattice, const RealFunction& f);

  const Lattice& lattice() const noexcept { return lattice_; }
  int depth() const noexcept { return lattice_.depth(); }

  /// Throws InsufficientDepth past the stored depth.
  double at(const LatticePoint& p) const;
  double value_at_fixed() const noexcept { return fixed_; }
  void set(const LatticePoint& p, double value);

  PointFunction as_point_function() const;

  /// Free values in storage order: a-orbit, b-orbit, then the fixed value.
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
  std::size_t size() const noexcept;

 private:
  Lattice lattice_;
  std::vector<double> a_;
  std::vector<double> b_;
  double fixed_ = 0.0;
};

/// D^order at a point off the fixed point from the stencil n .. n+order.
double lattice_derivative(const Lattice& lattice, const PointFunction& f, int order,
                          const LatticePoint& p);

/// Applies `order` Hahn quotients to values sampled at base, base+1, ...
/// along one orbit; `values` must hold at least order + 1 entries.
double stencil_derivative(const Lattice& lattice, LatticePoint base, std::span<const double> values,
                          int order);

/// Value at omega0 of a function continuous there, estimated as the limit of
/// g(o, n) along a live orbit: samples at n*, n*+1, n*+2 combined by two
/// Richardson steps with ratios q and q^2 (the orbit approaches omega0
/// geometrically). n* is the first index with q^n |s - omega0| below
/// 1e-3 max(1, |omega0|), capped so that n* + 2 <= max_index.
double orbit_limit(const Lattice& lattice, const PointFunction& g,
                   std::optional<int> max_index = std::nullopt);

/// D^r of a grid function at a point; at omega0 the orbit limit of D^r.
double hahn_derivative_n(const GridFunction& y, int r, const LatticePoint& p);

/// norm_{r,inf}(y) = sum_{i<=r} sup |D^i y| over points whose stencil fits.
double norm_r_inf(const HahnParams& params, const GridFunction& y, int r);

/// Integral from a to b of a function given on the lattice. When
/// `max_index` bounds the available samples the tail beyond it is closed
/// with `value_at_fixed` (continuity at omega0).
SeriesResult lattice_integral(const Lattice& lattice, const PointFunction& g,
                              const SeriesOptions& options,
                              std::optional<int> max_index = std::nullopt,
                              const std::function<double()>& value_at_fixed = {});

}  // namespace hahnvar
