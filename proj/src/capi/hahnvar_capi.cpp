#include "hahnvar/hahnvar.h"

#include <array>
#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/hahn_params.hpp"
#include "core/lattice.hpp"
#include "core/operators.hpp"
#include "dsl/expr.hpp"
#include "variational/candidate.hpp"
#include "variational/demos.hpp"
#include "variational/euler_lagrange.hpp"
#include "variational/functional.hpp"
#include "variational/minimize.hpp"
#include "variational/problem.hpp"
#include "variational/trajectory.hpp"

struct hv_problem {
  hahnvar::Problem problem;
};

struct hv_candidate {
  hahnvar::Candidate candidate;
};

struct hv_el_report {
  hahnvar::ElReport report;
  hahnvar::Lattice lattice;
};

struct hv_minimize_result {
  hahnvar::MinimizeResult result;
  std::vector<hahnvar::LatticePoint> points;
};

namespace {

using namespace hahnvar;

thread_local std::string g_last_error;
thread_local int g_last_position = -1;

hv_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HV_ERR_INVALID_ARGUMENT;
    case ErrorCode::SyntaxError: return HV_ERR_SYNTAX;
    case ErrorCode::UnknownIdentifier: return HV_ERR_UNKNOWN_IDENTIFIER;
    case ErrorCode::UnboundVariable: return HV_ERR_UNBOUND_VARIABLE;
    case ErrorCode::ArityError: return HV_ERR_ARITY;
    case ErrorCode::DomainError: return HV_ERR_DOMAIN;
    case ErrorCode::NotDifferentiable: return HV_ERR_NOT_DIFFERENTIABLE;
    case ErrorCode::NonFiniteValue: return HV_ERR_NON_FINITE;
    case ErrorCode::DegenerateDenominator: return HV_ERR_DEGENERATE_DENOMINATOR;
    case ErrorCode::InsufficientDepth: return HV_ERR_INSUFFICIENT_DEPTH;
    case ErrorCode::NotAVariation: return HV_ERR_NOT_A_VARIATION;
  }
  return HV_ERR_INTERNAL;
}

hv_status fail(hv_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
hv_status guarded(F&& body) {
  g_last_error.clear();
  g_last_position = -1;
  try {
    body();
    return HV_OK;
  } catch (const SyntaxError& e) {
    g_last_position = static_cast<int>(e.position());
    return fail(HV_ERR_SYNTAX, e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HV_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool condition, const char* what) {
  if (!condition) raise(ErrorCode::InvalidArgument, what);
}

Origin origin_of(hv_origin o) {
  switch (o) {
    case HV_ORIGIN_A: return Origin::EndA;
    case HV_ORIGIN_B: return Origin::EndB;
    case HV_ORIGIN_OMEGA0: return Origin::Fixed;
  }
  raise(ErrorCode::InvalidArgument, "unknown lattice origin");
}

hv_origin origin_to_c(Origin o) {
  switch (o) {
    case Origin::EndA: return HV_ORIGIN_A;
    case Origin::EndB: return HV_ORIGIN_B;
    case Origin::Fixed: return HV_ORIGIN_OMEGA0;
  }
  return HV_ORIGIN_OMEGA0;
}

LatticePoint point_of(hv_point p) {
  const Origin o = origin_of(p.origin);
  if (o == Origin::Fixed) return LatticePoint::fixed();
  require(p.n >= 0, "orbit index must be non-negative");
  return {o, p.n};
}

hv_point point_to_c(const LatticePoint& p) { return {origin_to_c(p.origin), p.n}; }

RealFunction function_of(const char* text) {
  require(text != nullptr, "expression text is NULL");
  dsl::Expr expr = dsl::parse(text);
  if (expr.max_u_index() >= 0)
    raise(ErrorCode::UnknownIdentifier, "expressions here may only use t");
  return [expr](double t) {
    const std::array<double, 1> slots{t};
    return dsl::evaluate(expr, slots);
  };
}

SeriesOptions series_options(double tol, int max_terms) {
  SeriesOptions o;
  o.tol = tol;
  o.max_terms = max_terms;
  validate(o);
  return o;
}

hv_series series_to_c(const SeriesResult& s) {
  return {s.value, s.terms_used, s.tail_bound, s.converged ? 1 : 0};
}

double derivative(hv_mode mode, double q, double omega, const RealFunction& f, int order,
                  double t) {
  if (order == 0) return f(t);
  switch (mode) {
    case HV_MODE_HAHN:
      return hahn_derivative_n(HahnParams(q, omega), f, order, t);
    case HV_MODE_JACKSON: {
      RealFunction inner = [&](double s) { return derivative(mode, q, omega, f, order - 1, s); };
      return jackson_q_derivative(q, inner, t);
    }
    case HV_MODE_FORWARD: {
      RealFunction inner = [&](double s) { return derivative(mode, q, omega, f, order - 1, s); };
      return forward_h_difference(omega, inner, t);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown calculus mode");
}

Lattice candidate_lattice(const Problem& problem, const Candidate& y, int depth) {
  if (const GridFunction* g = y.grid_function()) return g->lattice();
  require(depth >= 1, "depth must be positive");
  return problem.lattice(depth);
}

BoundaryCheck boundary(const hv_problem* problem, const hv_candidate* y, double tol,
                       bool variation) {
  require(problem && y, "NULL handle");
  return variation ? is_variation(problem->problem, y->candidate, tol)
                   : is_admissible(problem->problem, y->candidate, tol);
}

}  // namespace

extern "C" {

const char* hv_last_error(void) { return g_last_error.c_str(); }

int hv_last_error_position(void) { return g_last_position; }

const char* hv_status_name(hv_status status) {
  switch (status) {
    case HV_OK: return "Ok";
    case HV_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case HV_ERR_SYNTAX: return "SyntaxError";
    case HV_ERR_UNKNOWN_IDENTIFIER: return "UnknownIdentifier";
    case HV_ERR_UNBOUND_VARIABLE: return "UnboundVariable";
    case HV_ERR_ARITY: return "ArityError";
    case HV_ERR_DOMAIN: return "DomainError";
    case HV_ERR_NOT_DIFFERENTIABLE: return "NotDifferentiable";
    case HV_ERR_NON_FINITE: return "NonFiniteValue";
    case HV_ERR_DEGENERATE_DENOMINATOR: return "DegenerateDenominator";
    case HV_ERR_INSUFFICIENT_DEPTH: return "InsufficientDepth";
    case HV_ERR_NOT_A_VARIATION: return "NotAVariation";
    case HV_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* hv_version(void) { return "1.0.0"; }

hv_status hv_omega0(double q, double omega, double* out) {
  return guarded([&] {
    require(out, "NULL output");
    *out = HahnParams(q, omega).omega0();
  });
}

hv_status hv_sigma(double q, double omega, double t, double* out) {
  return guarded([&] {
    require(out, "NULL output");
    *out = HahnParams(q, omega).sigma(t);
  });
}

hv_status hv_eval_expr(const char* expr, double t, double* out) {
  return guarded([&] {
    require(out, "NULL output");
    const double v = function_of(expr)(t);
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteValue, "expression is not finite");
    *out = v;
  });
}

hv_status hv_deriv(hv_mode mode, double q, double omega, const char* expr, int order, double t,
                   double* out) {
  return guarded([&] {
    require(out, "NULL output");
    require(order >= 0, "derivative order must be non-negative");
    const RealFunction f = function_of(expr);
    const double v = derivative(mode, q, omega, f, order, t);
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteValue, "derivative is not finite");
    *out = v;
  });
}

hv_status hv_integrate(hv_mode mode, double q, double omega, const char* expr, double a, double b,
                       double tol, int max_terms, hv_series* out) {
  return guarded([&] {
    require(out, "NULL output");
    const RealFunction f = function_of(expr);
    const SeriesOptions o = series_options(tol, max_terms);
    switch (mode) {
      case HV_MODE_HAHN: *out = series_to_c(integral(HahnParams(q, omega), f, a, b, o)); return;
      case HV_MODE_JACKSON: *out = series_to_c(jackson_q_integral(q, f, a, b, o)); return;
      case HV_MODE_FORWARD: *out = series_to_c(norlund_sum(omega, f, a, b, o)); return;
    }
    raise(ErrorCode::InvalidArgument, "unknown calculus mode");
  });
}

hv_status hv_problem_create(double q, double omega, int r, double a, double b, const double* alpha,
                            const double* beta, const char* lagrangian, int maximize,
                            hv_problem** out) {
  return guarded([&] {
    require(out && lagrangian, "NULL argument");
    require(r >= 1, "problem order r must be positive");
    require(alpha && beta, "boundary data are NULL");
    std::vector<double> al(alpha, alpha + r);
    std::vector<double> be(beta, beta + r);
    Problem p = make_problem(q, omega, r, a, b, std::move(al), std::move(be), lagrangian);
    p.maximize = maximize != 0;
    *out = new hv_problem{std::move(p)};
  });
}

hv_status hv_problem_discontinuous_example(hv_problem** out) {
  return guarded([&] {
    require(out, "NULL output");
    *out = new hv_problem{discontinuous_minimizer_problem()};
  });
}

void hv_problem_free(hv_problem* problem) { delete problem; }

hv_status hv_problem_omega0(const hv_problem* problem, double* out) {
  return guarded([&] {
    require(problem && out, "NULL argument");
    *out = problem->problem.params.omega0();
  });
}

hv_status hv_problem_order(const hv_problem* problem, int* out) {
  return guarded([&] {
    require(problem && out, "NULL argument");
    *out = problem->problem.r;
  });
}

hv_status hv_problem_point(const hv_problem* problem, hv_point p, double* out) {
  return guarded([&] {
    require(problem && out, "NULL argument");
    *out = problem->problem.lattice(1).realize(point_of(p));
  });
}

hv_status hv_candidate_from_expr(const char* expr, hv_candidate** out) {
  return guarded([&] {
    require(expr && out, "NULL argument");
    *out = new hv_candidate{Candidate::expression(std::string_view(expr))};
  });
}

hv_status hv_candidate_builtin(const char* name, hv_candidate** out) {
  return guarded([&] {
    require(name && out, "NULL argument");
    *out = new hv_candidate{Candidate::builtin(name)};
  });
}

hv_status hv_candidate_from_table(const hv_problem* problem, int depth, const hv_point* points,
                                  const double* values, size_t count, double omega0_value,
                                  hv_candidate** out) {
  return guarded([&] {
    require(problem && out, "NULL argument");
    require(count == 0 || (points && values), "table rows are NULL");
    require(depth >= 1, "table depth must be positive");
    const Lattice lattice = problem->problem.lattice(depth);
    GridFunction grid(lattice);
    grid.set(LatticePoint::fixed(), omega0_value);
    std::vector<std::vector<bool>> seen(2, std::vector<bool>(static_cast<std::size_t>(depth) + 1));
    for (size_t i = 0; i < count; ++i) {
      const LatticePoint p = point_of(points[i]);
      if (p.origin != Origin::Fixed) {
        if (lattice.collapsed(p.origin))
          raise(ErrorCode::InvalidArgument,
                "row " + to_string(p) + ": this orbit is the fixed point; use omega0");
        if (p.n > depth)
          raise(ErrorCode::InsufficientDepth, "row " + to_string(p) + " is beyond the depth");
        std::vector<bool>& row = seen[p.origin == Origin::EndA ? 0 : 1];
        const auto n = static_cast<std::size_t>(p.n);
        if (row[n]) raise(ErrorCode::InvalidArgument, "duplicate row " + to_string(p));
        row[n] = true;
      }
      grid.set(p, values[i]);
    }
    for (Origin o : lattice.live_orbits())
      for (int n = 0; n <= depth; ++n)
        if (!seen[o == Origin::EndA ? 0 : 1][static_cast<std::size_t>(n)])
          raise(ErrorCode::InvalidArgument,
                "table is missing point " + to_string(LatticePoint{o, n}));
    *out = new hv_candidate{Candidate::grid(std::move(grid))};
  });
}

void hv_candidate_free(hv_candidate* candidate) { delete candidate; }

hv_status hv_candidate_value(const hv_problem* problem, const hv_candidate* candidate, hv_point p,
                             double* out) {
  return guarded([&] {
    require(problem && candidate && out, "NULL argument");
    const Lattice lattice = candidate_lattice(problem->problem, candidate->candidate, kDefaultDepth);
    *out = candidate->candidate.value(lattice, point_of(p));
  });
}

hv_status hv_trajectory(const hv_problem* problem, const hv_candidate* y, hv_point p, int depth,
                        double* out, size_t out_len) {
  return guarded([&] {
    require(problem && y && out, "NULL argument");
    const Problem& pr = problem->problem;
    require(out_len >= static_cast<size_t>(pr.r) + 2, "output buffer shorter than r + 2");
    const Lattice lattice = candidate_lattice(pr, y->candidate, depth);
    const LatticePoint lp = point_of(p);
    if (!lattice.at_fixed(lp) && lp.n + pr.r > lattice.depth())
      raise(ErrorCode::InsufficientDepth, "trajectory at " + to_string(lp) + " needs depth " +
                                              std::to_string(lp.n + pr.r));
    const TrajectoryEvaluator eval(pr, lattice, y->candidate);
    const std::vector<double> args = eval.trajectory(lp);
    std::memcpy(out, args.data(), args.size() * sizeof(double));
  });
}

hv_status hv_functional_value(const hv_problem* problem, const hv_candidate* y, double tol,
                              int max_terms, hv_series* out) {
  return guarded([&] {
    require(problem && y && out, "NULL argument");
    *out = series_to_c(
        functional_value(problem->problem, y->candidate, series_options(tol, max_terms)));
  });
}

hv_status hv_first_variation(const hv_problem* problem, const hv_candidate* y,
                             const hv_candidate* eta, double tol, int max_terms, hv_series* out) {
  return guarded([&] {
    require(problem && y && eta && out, "NULL argument");
    *out = series_to_c(first_variation(problem->problem, y->candidate, eta->candidate,
                                       series_options(tol, max_terms)));
  });
}

hv_status hv_first_variation_fd(const hv_problem* problem, const hv_candidate* y,
                                const hv_candidate* eta, double eps, double tol, int max_terms,
                                double* out) {
  return guarded([&] {
    require(problem && y && eta && out, "NULL argument");
    *out = first_variation_fd(problem->problem, y->candidate, eta->candidate, eps,
                              series_options(tol, max_terms));
  });
}

hv_status hv_is_admissible(const hv_problem* problem, const hv_candidate* y, double tol, int* ok,
                           size_t* violations) {
  return guarded([&] {
    require(ok, "NULL output");
    const BoundaryCheck c = boundary(problem, y, tol, false);
    *ok = c.ok ? 1 : 0;
    if (violations) *violations = c.violations.size();
  });
}

hv_status hv_is_variation(const hv_problem* problem, const hv_candidate* eta, double tol, int* ok,
                          size_t* violations) {
  return guarded([&] {
    require(ok, "NULL output");
    const BoundaryCheck c = boundary(problem, eta, tol, true);
    *ok = c.ok ? 1 : 0;
    if (violations) *violations = c.violations.size();
  });
}

hv_status hv_el_residual(const hv_problem* problem, const hv_candidate* y, hv_mode mode,
                         hv_point p, int depth, double* out) {
  return guarded([&] {
    require(problem && y && out, "NULL argument");
    const Problem& pr = problem->problem;
    const LatticePoint lp = point_of(p);
    switch (mode) {
      case HV_MODE_HAHN:
        *out = el_residual(pr, candidate_lattice(pr, y->candidate, depth), y->candidate, lp);
        return;
      case HV_MODE_JACKSON: *out = q_el_residual(pr, y->candidate, lp, depth); return;
      case HV_MODE_FORWARD: *out = h_el_residual(pr, y->candidate, lp, depth); return;
    }
    raise(ErrorCode::InvalidArgument, "unknown calculus mode");
  });
}

hv_status hv_el_report_create(const hv_problem* problem, const hv_candidate* y, int depth,
                              double tol, int include_omega0, hv_el_report** out) {
  return guarded([&] {
    require(problem && y && out, "NULL argument");
    ElReport report = el_report(problem->problem, y->candidate, depth, tol, include_omega0 != 0);
    *out = new hv_el_report{std::move(report), problem->problem.lattice(depth)};
  });
}

void hv_el_report_free(hv_el_report* report) { delete report; }

hv_status hv_el_report_summary(const hv_el_report* report, hv_el_summary* out) {
  return guarded([&] {
    require(report && out, "NULL argument");
    const ElReport& r = report->report;
    out->max_abs_residual = r.max_abs_residual;
    out->residual_count = r.residuals.size();
    out->violation_count = r.boundary_violations.size();
    out->depth_used = r.depth_used;
    out->omega0_included = r.omega0_included ? 1 : 0;
    out->has_omega0_residual = r.omega0_residual ? 1 : 0;
    out->omega0_residual = r.omega0_residual.value_or(0.0);
    out->tol = r.tol;
    out->passes = r.passes() ? 1 : 0;
  });
}

hv_status hv_el_report_residual(const hv_el_report* report, size_t i, hv_point* point, double* t,
                                double* residual) {
  return guarded([&] {
    require(report, "NULL handle");
    const auto& rows = report->report.residuals;
    require(i < rows.size(), "residual index out of range");
    if (point) *point = point_to_c(rows[i].first);
    if (t) *t = report->lattice.realize(rows[i].first);
    if (residual) *residual = rows[i].second;
  });
}

hv_status hv_el_report_violation(const hv_el_report* report, size_t i, hv_violation* out) {
  return guarded([&] {
    require(report && out, "NULL argument");
    const auto& rows = report->report.boundary_violations;
    require(i < rows.size(), "violation index out of range");
    *out = {rows[i].index, origin_to_c(rows[i].endpoint), rows[i].error};
  });
}

hv_status hv_minimize(const hv_problem* problem, int depth, uint64_t seed, int max_iters,
                      double tol, int max_terms, hv_minimize_result** out) {
  return guarded([&] {
    require(problem && out, "NULL argument");
    MinimizeOptions o;
    o.depth = depth;
    o.seed = seed;
    o.max_iters = max_iters;
    o.series = series_options(tol, max_terms);
    MinimizeResult r = minimize_direct(problem->problem, o);
    std::vector<LatticePoint> points;
    const Lattice& lattice = r.best.lattice();
    for (const LatticePoint& p : lattice.points())
      if (!lattice.at_fixed(p) || p.origin == Origin::Fixed) points.push_back(p);
    *out = new hv_minimize_result{std::move(r), std::move(points)};
  });
}

void hv_minimize_result_free(hv_minimize_result* result) { delete result; }

hv_status hv_minimize_summary_get(const hv_minimize_result* result, hv_minimize_summary* out) {
  return guarded([&] {
    require(result && out, "NULL argument");
    const MinimizeResult& r = result->result;
    *out = {r.objective,       r.max_boundary_error, r.penalty_weight,       r.iterations,
            r.converged ? 1 : 0, r.history.size(),    result->points.size()};
  });
}

hv_status hv_minimize_history(const hv_minimize_result* result, size_t i, hv_history_entry* out) {
  return guarded([&] {
    require(result && out, "NULL argument");
    const auto& h = result->result.history;
    require(i < h.size(), "history index out of range");
    *out = {h[i].iteration, h[i].objective, h[i].penalty_weight};
  });
}

hv_status hv_minimize_point(const hv_minimize_result* result, size_t i, hv_point* point, double* t,
                            double* value) {
  return guarded([&] {
    require(result, "NULL handle");
    require(i < result->points.size(), "point index out of range");
    const LatticePoint& p = result->points[i];
    const GridFunction& g = result->result.best;
    if (point) *point = point_to_c(p);
    if (t) *t = g.lattice().realize(p);
    if (value) *value = g.at(p);
  });
}

hv_status hv_beam_max_residual(double q, double omega, double e, double xi, double* out) {
  return guarded([&] {
    require(out, "NULL output");
    *out = beam_max_residual(q, omega, e, xi);
  });
}

hv_status hv_nonnegativity_sweep(const hv_problem* problem, int count, uint64_t seed, int depth,
                                 double* min_value, int* negative) {
  return guarded([&] {
    require(problem && min_value && negative, "NULL argument");
    const NonnegativitySweep s = nonnegativity_sweep(problem->problem, count, seed, depth);
    *min_value = s.min_value;
    *negative = s.negative;
  });
}

}  // extern "C"
