#include "core/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "core/errors.hpp"

namespace hahnvar {

SeriesResult operator-(const SeriesResult& lhs, const SeriesResult& rhs) {
  return {lhs.value - rhs.value, lhs.terms_used + rhs.terms_used,
          lhs.tail_bound + rhs.tail_bound, lhs.converged && rhs.converged};
}

void validate(const SeriesOptions& options) {
  if (!(options.tol > 0.0)) raise(ErrorCode::InvalidArgument, "series tolerance must be positive");
  if (options.max_terms < 1) raise(ErrorCode::InvalidArgument, "max_terms must be at least 1");
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    carry_ += (sum_ - t) + x;
  else
    carry_ += (x - t) + sum_;
  sum_ = t;
}

SeriesResult weighted_series(double prefactor, double ratio,
                             const std::function<double(int)>& sample,
                             const SeriesOptions& options,
                             const std::optional<TailClosure>& closure) {
  validate(options);
  if (!(ratio > 0.0 && ratio <= 1.0))
    raise(ErrorCode::InvalidArgument, "series ratio must lie in (0, 1]");
  SeriesResult out;
  if (prefactor == 0.0) return out;
  if (closure && ratio == 1.0)
    raise(ErrorCode::InvalidArgument, "a tail closure needs a geometric ratio below 1");

  constexpr int kWindow = 5;
  std::array<double, kWindow> recent{};
  CompensatedSum sum;
  const double scale = std::abs(prefactor);
  const double geometric = ratio < 1.0 ? 1.0 / (1.0 - ratio) : 1.0;
  double last = 0.0;

  for (int k = 0; k < options.max_terms; ++k) {
    if (closure && k > closure->last_index) {
      const double limit = closure->limit_value();
      if (!std::isfinite(limit))
        raise(ErrorCode::NonFiniteValue, "non-finite limit value closing the series");
      const double tail_weight = std::pow(ratio, k) * geometric;
      sum.add(tail_weight * limit);
      out.value = prefactor * sum.value();
      out.terms_used = k;
      out.tail_bound = scale * tail_weight * std::abs(limit - last);
      out.converged = out.tail_bound <= options.tol;
      return out;
    }
    const double f = sample(k);
    if (!std::isfinite(f))
      raise(ErrorCode::NonFiniteValue, "non-finite integrand sample at term " + std::to_string(k));
    const double w = ratio < 1.0 ? std::pow(ratio, k) : 1.0;
    sum.add(w * f);
    last = f;
    recent[static_cast<std::size_t>(k % kWindow)] = std::abs(f);
    const double window_max = *std::max_element(recent.begin(), recent.end());
    const double bound = ratio < 1.0 ? scale * w * ratio * window_max * geometric
                                     : scale * window_max;
    out.terms_used = k + 1;
    out.tail_bound = bound;
    // A closed series is finite: every available sample is used.
    if (!closure && k + 1 >= kWindow && bound <= options.tol) {
      out.value = prefactor * sum.value();
      out.converged = true;
      return out;
    }
  }
  out.value = prefactor * sum.value();
  out.converged = false;
  return out;
}

}  // namespace hahnvar
