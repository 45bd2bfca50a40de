#pragma once

#include <functional>

#include "core/hahn_params.hpp"
#include "core/series.hpp"

namespace hahnvar {

using RealFunction = std::function<double(double)>;

/// Classical f'(x) from symmetric quotients at steps h/2 and h/4 with
/// h = 1e-4 max(1, |x|), one Richardson step (error O(h^4) for C^4 f).
double classical_derivative(const RealFunction& f, double x);

/// D_{q,omega}[f](t). At t == omega0 the classical derivative is returned.
double hahn_derivative(const HahnParams& params, const RealFunction& f, double t);

/// r-fold iterate of the Hahn derivative; r = 0 evaluates f.
double hahn_derivative_n(const HahnParams& params, const RealFunction& f, int r, double t);

/// Integral from omega0 to x: (x(1-q) - omega) sum_k q^k f(sigma^k(x)).
SeriesResult integral_from_fixed(const HahnParams& params, const RealFunction& f, double x,
                                 const SeriesOptions& options = {});

/// Jackson-Norlund integral from a to b (either order, a == b allowed).
SeriesResult integral(const HahnParams& params, const RealFunction& f, double a, double b,
                      const SeriesOptions& options = {});

/// Closed form of the integral over one sigma-cell [sigma(t), t].
double sigma_cell_integral(const HahnParams& params, const RealFunction& f, double t);

double forward_h_difference(double h, const RealFunction& f, double t);

/// Jackson q-derivative; at t == 0 the classical derivative.
double jackson_q_derivative(double q, const RealFunction& f, double t);

SeriesResult jackson_q_integral(double q, const RealFunction& f, double a, double b,
                                const SeriesOptions& options = {});

/// Norlund sum from a to b built from the one-sided sums
/// -omega sum_k f(x + k omega) taken from +infinity.
SeriesResult norlund_sum(double omega, const RealFunction& f, double a, double b,
                         const SeriesOptions& options = {});

}  // namespace hahnvar
