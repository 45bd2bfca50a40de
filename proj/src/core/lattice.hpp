#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/hahn_params.hpp"

namespace hahnvar {

enum class Origin : std::uint8_t { EndA, EndB, Fixed };

const char* to_string(Origin origin) noexcept;

/// A point of [a,b]_{q,omega}, identified by orbit and sigma-depth. Points are
/// compared on (origin, n) only; two orbits never share a point except the
/// fixed point, which `Lattice::canonical` folds together.
struct LatticePoint {
  Origin origin = Origin::EndA;
  int n = 0;

  static constexpr LatticePoint fixed() noexcept { return {Origin::Fixed, 0}; }
  LatticePoint shifted(int k) const noexcept {
    return origin == Origin::Fixed ? *this : LatticePoint{origin, n + k};
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

std::string to_string(const LatticePoint& p);

/// The sigma-orbits of two endpoints truncated at depth N, plus the fixed
/// point. Besides the Hahn lattice this also models the two limit lattices:
/// the Jackson lattice {s q^n} (omega = 0, fixed point 0) and the forward
/// h-lattice {s + n h} (q = 1, no fixed point).
class Lattice {
 public:
  enum class Kind { Hahn, Jackson, Forward };

  Lattice(const HahnParams& params, double a, double b, int depth);
  static Lattice jackson(double q, double a, double b, int depth);
  static Lattice forward(double h, double a, double b, int depth);

  Kind kind() const noexcept { return kind_; }
  double q() const noexcept { return q_; }
  double omega() const noexcept { return omega_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int depth() const noexcept { return depth_; }

  bool has_fixed() const noexcept { return kind_ != Kind::Forward; }
  /// omega0 for the Hahn lattice, 0 for the Jackson lattice.
  double fixed_point() const;

  double endpoint(Origin origin) const;
  /// True when the endpoint of this orbit is the fixed point itself, in
  /// which case the whole orbit is the single point omega0.
  bool collapsed(Origin origin) const noexcept;
  bool at_fixed(const LatticePoint& p) const noexcept {
    return p.origin == Origin::Fixed || collapsed(p.origin);
  }
  LatticePoint canonical(const LatticePoint& p) const noexcept {
    return at_fixed(p) ? LatticePoint::fixed() : p;
  }

  /// t-value of a point: q^n s + omega [n]_q (s + n h on the forward lattice).
  double realize(const LatticePoint& p) const;
  /// sigma(t) - t = (q - 1) t + omega at a point off the fixed point.
  double step(const LatticePoint& p) const;
  /// s (1 - q) - omega: the prefactor of the integral from omega0 to s.
  double integral_prefactor(Origin origin) const;

  /// Canonical points of the truncated lattice: both orbits for n <= depth
  /// (collapsed orbits omitted) followed by the fixed point.
  std::vector<LatticePoint> points() const;
  /// Orbits that are not collapsed onto the fixed point.
  std::vector<Origin> live_orbits() const;

  Lattice with_depth(int depth) const;
  bool same_geometry(const Lattice& other) const noexcept;

 private:
  Lattice(Kind kind, double q, double omega, double a, double b, int depth);

  Kind kind_;
  double q_;
  double omega_;
  double a_;
  double b_;
  int depth_;
  bool collapsed_a_ = false;
  bool collapsed_b_ = false;
};

}  // namespace hahnvar
