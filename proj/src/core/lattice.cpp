#include "core/lattice.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace hahnvar {

const char* to_string(Origin origin) noexcept {
  switch (origin) {
    case Origin::EndA: return "a";
    case Origin::EndB: return "b";
    case Origin::Fixed: return "omega0";
  }
  return "?";
}

std::string to_string(const LatticePoint& p) {
  if (p.origin == Origin::Fixed) return "omega0";
  return std::string(to_string(p.origin)) + "[" + std::to_string(p.n) + "]";
}

namespace {

bool is_fixed_endpoint(double s, double q, double omega) {
  const double lhs = s * (1.0 - q);
  const double scale = std::max(std::abs(lhs), std::abs(omega));
  return std::abs(lhs - omega) <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

Lattice::Lattice(Kind kind, double q, double omega, double a, double b, int depth)
    : kind_(kind), q_(q), omega_(omega), a_(a), b_(b), depth_(depth) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    raise(ErrorCode::InvalidArgument, "lattice endpoints must be finite with a < b");
  if (depth < 1) raise(ErrorCode::InvalidArgument, "lattice depth must be positive");
  if (kind_ != Kind::Forward) {
    collapsed_a_ = is_fixed_endpoint(a, q, omega);
    collapsed_b_ = is_fixed_endpoint(b, q, omega);
  }
}

Lattice::Lattice(const HahnParams& params, double a, double b, int depth)
    : Lattice(Kind::Hahn, params.q(), params.omega(), a, b, depth) {}

Lattice Lattice::jackson(double q, double a, double b, int depth) {
  if (!(q > 0.0 && q < 1.0)) raise(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  return Lattice(Kind::Jackson, q, 0.0, a, b, depth);
}

Lattice Lattice::forward(double h, double a, double b, int depth) {
  if (!(h > 0.0) || !std::isfinite(h)) raise(ErrorCode::InvalidArgument, "h must be positive");
  return Lattice(Kind::Forward, 1.0, h, a, b, depth);
}

double Lattice::fixed_point() const {
  switch (kind_) {
    case Kind::Hahn: return omega_ / (1.0 - q_);
    case Kind::Jackson: return 0.0;
    case Kind::Forward: break;
  }
  raise(ErrorCode::InvalidArgument, "the forward h-lattice has no fixed point");
}

double Lattice::endpoint(Origin origin) const {
  switch (origin) {
    case Origin::EndA: return a_;
    case Origin::EndB: return b_;
    case Origin::Fixed: return fixed_point();
  }
  return a_;
}

bool Lattice::collapsed(Origin origin) const noexcept {
  if (origin == Origin::EndA) return collapsed_a_;
  if (origin == Origin::EndB) return collapsed_b_;
  return true;
}

double Lattice::realize(const LatticePoint& p) const {
  if (at_fixed(p)) return fixed_point();
  if (p.n < 0) raise(ErrorCode::InvalidArgument, "lattice index must be non-negative");
  const double s = endpoint(p.origin);
  if (kind_ == Kind::Forward) return s + p.n * omega_;
  return std::pow(q_, p.n) * s + omega_ * q_bracket(p.n, q_);
}

double Lattice::step(const LatticePoint& p) const {
  if (at_fixed(p)) raise(ErrorCode::InvalidArgument, "no lattice step at the fixed point");
  if (kind_ == Kind::Forward) return omega_;
  const double d = (q_ - 1.0) * realize(p) + omega_;
  if (d == 0.0)
    raise(ErrorCode::DegenerateDenominator,
          "(q-1)t+omega underflows to 0 at " + to_string(p));
  return d;
}

double Lattice::integral_prefactor(Origin origin) const {
  if (collapsed(origin)) return 0.0;
  return endpoint(origin) * (1.0 - q_) - omega_;
}

std::vector<LatticePoint> Lattice::points() const {
  std::vector<LatticePoint> out;
  for (Origin o : live_orbits())
    for (int n = 0; n <= depth_; ++n) out.push_back({o, n});
  if (has_fixed()) out.push_back(LatticePoint::fixed());
  return out;
}

std::vector<Origin> Lattice::live_orbits() const {
  std::vector<Origin> out;
  if (!collapsed_a_) out.push_back(Origin::EndA);
  if (!collapsed_b_) out.push_back(Origin::EndB);
  return out;
}

Lattice Lattice::with_depth(int depth) const {
  Lattice copy = *this;
  if (depth < 1) raise(ErrorCode::InvalidArgument, "lattice depth must be positive");
  copy.depth_ = depth;
  return copy;
}

bool Lattice::same_geometry(const Lattice& other) const noexcept {
  return kind_ == other.kind_ && q_ == other.q_ && omega_ == other.omega_ && a_ == other.a_ &&
         b_ == other.b_;
}

}  // namespace hahnvar
