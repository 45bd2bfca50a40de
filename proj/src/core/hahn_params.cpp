#include "core/hahn_params.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace hahnvar {

HahnParams::HahnParams(double q, double omega) : q_(q), omega_(omega) {
  if (!(q > 0.0 && q < 1.0))
    raise(ErrorCode::InvalidArgument, "q must lie in (0, 1), got " + std::to_string(q));
  if (!(omega > 0.0) || !std::isfinite(omega))
    raise(ErrorCode::InvalidArgument, "omega must be positive, got " + std::to_string(omega));
}

double HahnParams::sigma_pow(int k, double t) const {
  if (k >= 0) return std::pow(q_, k) * t + omega_ * q_bracket(k, q_);
  const int m = -k;
  return (t - omega_ * q_bracket(m, q_)) / std::pow(q_, m);
}

double omega0(const HahnParams& params) noexcept { return params.omega0(); }

double q_bracket(int k, double q) {
  if (k < 0) raise(ErrorCode::InvalidArgument, "q_bracket needs k >= 0");
  if (q == 1.0) return static_cast<double>(k);
  return (1.0 - std::pow(q, k)) / (1.0 - q);
}

}  // namespace hahnvar
