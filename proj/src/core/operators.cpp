#include "core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace hahnvar {

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) raise(ErrorCode::NonFiniteValue, std::string("non-finite value in ") + what);
  return v;
}

double eval(const RealFunction& f, double t) { return checked(f(t), "function evaluation"); }

}  // namespace

double classical_derivative(const RealFunction& f, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  auto central = [&](double step) { return (eval(f, x + step) - eval(f, x - step)) / (2.0 * step); };
  const double d2 = central(h / 2.0);
  const double d4 = central(h / 4.0);
  return checked((4.0 * d4 - d2) / 3.0, "classical derivative");
}

double hahn_derivative(const HahnParams& params, const RealFunction& f, double t) {
  if (t == params.omega0()) return classical_derivative(f, t);
  const double denom = (params.q() - 1.0) * t + params.omega();
  if (denom == 0.0)
    raise(ErrorCode::DegenerateDenominator,
          "(q-1)t+omega underflows to 0 at t=" + std::to_string(t));
  return checked((eval(f, params.sigma(t)) - eval(f, t)) / denom, "Hahn derivative");
}

double hahn_derivative_n(const HahnParams& params, const RealFunction& f, int r, double t) {
  if (r < 0) raise(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  if (r == 0) return eval(f, t);
  RealFunction lower = [&params, &f, r](double s) { return hahn_derivative_n(params, f, r - 1, s); };
  return hahn_derivative(params, lower, t);
}

SeriesResult integral_from_fixed(const HahnParams& params, const RealFunction& f, double x,
                                 const SeriesOptions& options) {
  validate(options);
  if (!std::isfinite(x)) raise(ErrorCode::InvalidArgument, "integration limit must be finite");
  if (x == params.omega0()) return {};
  const double q = params.q();
  const double prefactor = x * (1.0 - q) - params.omega();
  return weighted_series(
      prefactor, q, [&](int k) { return f(params.sigma_pow(k, x)); }, options);
}

SeriesResult integral(const HahnParams& params, const RealFunction& f, double a, double b,
                      const SeriesOptions& options) {
  validate(options);
  if (a == b) return {};
  return integral_from_fixed(params, f, b, options) - integral_from_fixed(params, f, a, options);
}

double sigma_cell_integral(const HahnParams& params, const RealFunction& f, double t) {
  if (t == params.omega0()) return 0.0;
  return (t * (1.0 - params.q()) - params.omega()) * eval(f, t);
}

double forward_h_difference(double h, const RealFunction& f, double t) {
  if (!(h > 0.0)) raise(ErrorCode::InvalidArgument, "h must be positive");
  return checked((eval(f, t + h) - eval(f, t)) / h, "forward difference");
}

double jackson_q_derivative(double q, const RealFunction& f, double t) {
  if (!(q > 0.0 && q < 1.0)) raise(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  if (t == 0.0) return classical_derivative(f, 0.0);
  const double denom = t * (q - 1.0);
  if (denom == 0.0) raise(ErrorCode::DegenerateDenominator, "t(q-1) underflows to 0");
  return checked((eval(f, q * t) - eval(f, t)) / denom, "Jackson derivative");
}

SeriesResult jackson_q_integral(double q, const RealFunction& f, double a, double b,
                                const SeriesOptions& options) {
  if (!(q > 0.0 && q < 1.0)) raise(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  validate(options);
  if (a == b) return {};
  auto from_zero = [&](double x) -> SeriesResult {
    if (x == 0.0) return {};
    return weighted_series(
        x * (1.0 - q), q, [&](int k) { return f(x * std::pow(q, k)); }, options);
  };
  return from_zero(b) - from_zero(a);
}

SeriesResult norlund_sum(double omega, const RealFunction& f, double a, double b,
                         const SeriesOptions& options) {
  if (!(omega > 0.0)) raise(ErrorCode::InvalidArgument, "omega must be positive");
  validate(options);
  if (a == b) return {};
  auto from_infinity = [&](double x) {
    return weighted_series(-omega, 1.0, [&](int k) { return f(x + k * omega); }, options);
  };
  return from_infinity(b) - from_infinity(a);
}

}  // namespace hahnvar
