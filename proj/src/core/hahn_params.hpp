#pragma once

namespace hahnvar {

/// The pair (q, omega) of the Hahn operator, 0 < q < 1 and omega > 0.
/// sigma(t) = q t + omega is a contraction with fixed point omega0.
class HahnParams {
 public:
  HahnParams(double q, double omega);

  double q() const noexcept { return q_; }
  double omega() const noexcept { return omega_; }
  double omega0() const noexcept { return omega_ / (1.0 - q_); }

  double sigma(double t) const noexcept { return q_ * t + omega_; }

  /// Closed form of the k-th power of sigma; negative k inverts.
  double sigma_pow(int k, double t) const;

  friend bool operator==(const HahnParams&, const HahnParams&) = default;

 private:
  double q_;
  double omega_;
};

double omega0(const HahnParams& params) noexcept;

/// [k]_q = (1 - q^k) / (1 - q) = 1 + q + ... + q^(k-1).
double q_bracket(int k, double q);

}  // namespace hahnvar
