#pragma once

#include <functional>
#include <optional>

namespace hahnvar {

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  /// Estimated magnitude of the discarded tail.
  double tail_bound = 0.0;
  bool converged = true;
};

SeriesResult operator-(const SeriesResult& lhs, const SeriesResult& rhs);

struct SeriesOptions {
  double tol = 1e-12;
  int max_terms = 10'000;
};

void validate(const SeriesOptions& options);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// How a sampled series ends when the sampler runs out of points.
struct TailClosure {
  /// Index of the last sample that may be requested.
  int last_index = 0;
  /// Value substituted for every sample beyond `last_index`.
  std::function<double()> limit_value;
};

/// prefactor * sum_k ratio^k sample(k), 0 < ratio <= 1, summed in increasing
/// k. Stops after term k once |prefactor| ratio^(k+1) M_k / (1 - ratio) <= tol,
/// where M_k is the largest |sample| among the last five terms (for ratio = 1
/// the bound is |prefactor| M_k). Never fewer than five terms unless the
/// sampler is exhausted. With a closure the stop rule is off: every sample up
/// to `last_index` is summed and the remainder is closed with the limit value.
SeriesResult weighted_series(double prefactor, double ratio,
                             const std::function<double(int)>& sample,
                             const SeriesOptions& options,
                             const std::optional<TailClosure>& closure = std::nullopt);

}  // namespace hahnvar
