#include "commands.hpp"

#include <cmath>
#include <vector>

#include "capi.hpp"

namespace cli {

namespace {

constexpr double kSeriesTol = 1e-12;
constexpr int kMaxTerms = 10'000;
constexpr double kCheckTol = 1e-9;
constexpr int kReportDepth = 40;
constexpr int kMinimizeDepth = 12;
constexpr int kMaxIters = 5000;
constexpr int kSweepCount = 100;
constexpr int kSweepDepth = 20;

hv_mode mode_of(const std::string& name) {
  if (name == "hahn") return HV_MODE_HAHN;
  if (name == "jackson") return HV_MODE_JACKSON;
  if (name == "h") return HV_MODE_FORWARD;
  throw CliError(kInputError, "mode must be hahn, jackson or h, not '" + name + "'");
}

template <typename T>
T pick(const std::optional<T>& flag, const std::optional<T>& config, T fallback) {
  if (flag) return *flag;
  if (config) return *config;
  return fallback;
}

void merge(Doc& into, const Doc& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

Doc series_doc(const hv_series& s) {
  Doc d;
  d["value"] = s.value;
  d["terms_used"] = s.terms_used;
  d["tail_bound"] = s.tail_bound;
  d["converged"] = s.converged != 0;
  return d;
}

Problem make_problem(const RunConfig& c) {
  hv_problem* p = nullptr;
  check(hv_problem_create(c.q, c.omega, c.r, c.a, c.b, c.alpha.data(), c.beta.data(),
                          c.lagrangian.c_str(), 0, &p));
  return Problem(p);
}

Candidate make_candidate(const RunConfig& c, const hv_problem* problem, int depth) {
  if (!c.candidate) throw CliError(kInputError, "config: missing required key 'candidate'");
  const CandidateSpec& spec = *c.candidate;
  hv_candidate* y = nullptr;
  switch (spec.kind) {
    case CandidateSpec::Kind::Expr: check(hv_candidate_from_expr(spec.text.c_str(), &y)); break;
    case CandidateSpec::Kind::Builtin: check(hv_candidate_builtin(spec.text.c_str(), &y)); break;
    case CandidateSpec::Kind::Table:
      check(hv_candidate_from_table(problem, depth, spec.points.data(), spec.values.data(),
                                    spec.points.size(), spec.omega0, &y));
      break;
  }
  return Candidate(y);
}

// Depth of a table candidate is fixed by its rows.
int table_depth(const RunConfig& c, int fallback) {
  if (!c.candidate || c.candidate->kind != CandidateSpec::Kind::Table) return fallback;
  int depth = 0;
  for (const hv_point& p : c.candidate->points) depth = std::max(depth, p.n);
  return depth;
}

Doc violations_doc(const hv_el_report* report, size_t count) {
  Doc rows = Doc::array();
  for (size_t i = 0; i < count; ++i) {
    hv_violation v{};
    check(hv_el_report_violation(report, i, &v));
    Doc row;
    row["index"] = v.index;
    row["endpoint"] = origin_name(v.endpoint);
    row["error"] = v.error;
    rows.push_back(row);
  }
  return rows;
}

Doc report_doc(const hv_el_report* report, bool* passes) {
  hv_el_summary s{};
  check(hv_el_report_summary(report, &s));
  Doc d;
  d["passes"] = s.passes != 0;
  d["tol"] = s.tol;
  d["max_abs_residual"] = s.max_abs_residual;
  d["depth_used"] = s.depth_used;
  d["omega0_included"] = s.omega0_included != 0;
  d["omega0_residual"] = s.has_omega0_residual ? Doc(s.omega0_residual) : Doc(nullptr);
  d["omega0_tol"] = 100.0 * s.tol;
  d["boundary_violations"] = violations_doc(report, s.violation_count);
  Doc rows = Doc::array();
  for (size_t i = 0; i < s.residual_count; ++i) {
    hv_point p{};
    double t = 0.0;
    double res = 0.0;
    check(hv_el_report_residual(report, i, &p, &t, &res));
    Doc row;
    row["origin"] = origin_name(p.origin);
    row["n"] = p.n;
    row["t"] = t;
    row["residual"] = res;
    rows.push_back(row);
  }
  d["residuals"] = rows;
  if (passes) *passes = s.passes != 0;
  return d;
}

}  // namespace

Outcome cmd_deriv(const DerivArgs& args, const GlobalOptions&) {
  if (args.order < 0) throw CliError(kInputError, "--order must be non-negative");
  double value = 0.0;
  check(hv_deriv(mode_of(args.mode), args.q, args.omega, args.expr.c_str(), args.order, args.t,
                 &value));
  Outcome out;
  out.doc["command"] = "deriv";
  out.doc["mode"] = args.mode;
  out.doc["q"] = args.q;
  out.doc["omega"] = args.omega;
  out.doc["expr"] = args.expr;
  out.doc["t"] = args.t;
  out.doc["order"] = args.order;
  out.doc["value"] = value;
  return out;
}

Outcome cmd_integrate(const IntegrateArgs& args, const GlobalOptions& g) {
  hv_series s{};
  check(hv_integrate(mode_of(args.mode), args.q, args.omega, args.expr.c_str(), args.a, args.b,
                     g.tol.value_or(kSeriesTol), g.max_terms.value_or(kMaxTerms), &s));
  Outcome out;
  out.doc["command"] = "integrate";
  out.doc["mode"] = args.mode;
  out.doc["q"] = args.q;
  out.doc["omega"] = args.omega;
  out.doc["expr"] = args.expr;
  out.doc["a"] = args.a;
  out.doc["b"] = args.b;
  merge(out.doc, series_doc(s));
  if (!s.converged) {
    out.exit_code = kNonConvergence;
    out.diagnostics = "series did not converge after " + std::to_string(s.terms_used) +
                      " terms (tail bound " + format_number(s.tail_bound) + ")";
  }
  return out;
}

Outcome cmd_el_check(const std::string& config_path, const GlobalOptions& g) {
  const RunConfig c = load_config(config_path);
  const Problem problem = make_problem(c);
  const int depth = table_depth(c, pick(g.depth, c.depth, kReportDepth));
  const Candidate y = make_candidate(c, problem.get(), depth);
  const double tol = pick(g.tol, c.tol, kCheckTol);
  const bool omega0 = g.include_omega0 || c.include_omega0.value_or(false);
  hv_el_report* raw = nullptr;
  check(hv_el_report_create(problem.get(), y.get(), depth, tol, omega0 ? 1 : 0, &raw));
  const Report report(raw);
  Outcome out;
  out.config_format = c.format;
  bool passes = false;
  out.doc["command"] = "el-check";
  merge(out.doc, report_doc(report.get(), &passes));
  out.exit_code = passes ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_evaluate(const std::string& config_path, const GlobalOptions& g) {
  const RunConfig c = load_config(config_path);
  const Problem problem = make_problem(c);
  const int depth = table_depth(c, pick(g.depth, c.depth, kReportDepth));
  const Candidate y = make_candidate(c, problem.get(), depth);
  hv_series s{};
  check(hv_functional_value(problem.get(), y.get(), pick(g.tol, c.tol, kSeriesTol),
                            pick(g.max_terms, c.max_terms, kMaxTerms), &s));
  int ok = 0;
  size_t violations = 0;
  check(hv_is_admissible(problem.get(), y.get(), kCheckTol, &ok, &violations));
  Outcome out;
  out.config_format = c.format;
  out.doc["command"] = "evaluate";
  merge(out.doc, series_doc(s));
  out.doc["admissible"] = ok != 0;
  out.doc["boundary_violation_count"] = violations;
  if (!s.converged) {
    out.exit_code = kNonConvergence;
    out.diagnostics = "functional series did not converge after " +
                      std::to_string(s.terms_used) + " terms";
  }
  return out;
}

Outcome cmd_minimize(const std::string& config_path, const GlobalOptions& g, bool maximize) {
  const RunConfig c = load_config(config_path);
  hv_problem* raw_problem = nullptr;
  check(hv_problem_create(c.q, c.omega, c.r, c.a, c.b, c.alpha.data(), c.beta.data(),
                          c.lagrangian.c_str(), maximize ? 1 : 0, &raw_problem));
  const Problem problem(raw_problem);
  const int depth = pick(g.depth, c.depth, kMinimizeDepth);
  const std::uint64_t seed = g.seed.value_or(0);
  hv_minimize_result* raw = nullptr;
  check(hv_minimize(problem.get(), depth, seed, g.max_iters.value_or(kMaxIters),
                    pick(g.tol, c.tol, kSeriesTol), pick(g.max_terms, c.max_terms, kMaxTerms),
                    &raw));
  const MinResult result(raw);
  hv_minimize_summary s{};
  check(hv_minimize_summary_get(result.get(), &s));

  Outcome out;
  out.config_format = c.format;
  Doc& d = out.doc;
  d["command"] = "minimize";
  d["converged"] = s.converged != 0;
  d["objective"] = s.objective;
  d["max_boundary_error"] = s.max_boundary_error;
  d["penalty_weight"] = s.penalty_weight;
  d["iterations"] = s.iterations;
  d["seed"] = seed;
  d["depth"] = depth;
  d["maximize"] = maximize;
  Doc history = Doc::array();
  for (size_t i = 0; i < s.history_length; ++i) {
    hv_history_entry h{};
    check(hv_minimize_history(result.get(), i, &h));
    history.push_back({{"iteration", h.iteration},
                       {"objective", h.objective},
                       {"penalty_weight", h.penalty_weight}});
  }
  d["history"] = history;
  Doc grid = Doc::array();
  for (size_t i = 0; i < s.point_count; ++i) {
    hv_point p{};
    double t = 0.0;
    double v = 0.0;
    check(hv_minimize_point(result.get(), i, &p, &t, &v));
    grid.push_back({{"origin", origin_name(p.origin)}, {"n", p.n}, {"t", t}, {"value", v}});
  }
  d["grid"] = grid;
  if (!s.converged) {
    out.exit_code = kNonConvergence;
    out.diagnostics = "minimizer stopped after " + std::to_string(s.iterations) +
                      " iterations without converging; best iterate reported";
  }
  return out;
}

Outcome cmd_demo_discontinuous_example(const GlobalOptions& g) {
  hv_problem* raw_problem = nullptr;
  check(hv_problem_discontinuous_example(&raw_problem));
  const Problem problem(raw_problem);
  hv_candidate* raw_y = nullptr;
  check(hv_candidate_builtin("ystar", &raw_y));
  const Candidate y(raw_y);

  hv_series value{};
  check(hv_functional_value(problem.get(), y.get(), kSeriesTol, g.max_terms.value_or(kMaxTerms),
                            &value));
  const double tol = g.tol.value_or(kCheckTol);
  hv_el_report* raw_report = nullptr;
  check(hv_el_report_create(problem.get(), y.get(), g.depth.value_or(kReportDepth), tol,
                            g.include_omega0 ? 1 : 0, &raw_report));
  const Report report(raw_report);
  const std::uint64_t seed = g.seed.value_or(0);
  double min_value = 0.0;
  int negative = 0;
  check(hv_nonnegativity_sweep(problem.get(), kSweepCount, seed, kSweepDepth, &min_value,
                               &negative));

  Outcome out;
  bool report_passes = false;
  Doc& d = out.doc;
  d["command"] = "demo";
  d["name"] = "paper-example";
  d["problem"] = {{"q", 0.5},          {"omega", 0.5},   {"a", -1.0},
                  {"b", 1.0},          {"r", 1},         {"alpha", {0.0}},
                  {"beta", {-1.0}},    {"lagrangian", "(u0 + 0.5)^2 * (u1^2 - 1)^2"},
                  {"candidate", "ystar"}};
  d["functional"] = series_doc(value);
  d["el_report"] = report_doc(report.get(), &report_passes);
  d["sweep"] = {{"count", kSweepCount},
                {"seed", seed},
                {"depth", kSweepDepth},
                {"min_value", min_value},
                {"negative", negative}};
  const bool passes = std::abs(value.value) <= kSeriesTol && report_passes && negative == 0;
  d["passes"] = passes;
  out.exit_code = passes ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_demo_beam(const BeamArgs& args, const GlobalOptions&) {
  const std::vector<std::pair<double, double>> sequence = {{0.9, 0.1}, {0.99, 0.01}, {0.999, 0.001}};
  Outcome out;
  Doc& d = out.doc;
  d["command"] = "demo";
  d["name"] = "beam";
  d["e"] = args.e;
  d["xi"] = args.xi;
  d["lagrangian"] = "0.5*(e*u2)^2 - xi*u0";
  d["interval"] = {0.0, 2.0};
  Doc rows = Doc::array();
  bool decreasing = true;
  double previous = 0.0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto [q, omega] = sequence[i];
    double res = 0.0;
    check(hv_beam_max_residual(q, omega, args.e, args.xi, &res));
    if (i > 0 && !(res < previous)) decreasing = false;
    previous = res;
    rows.push_back({{"q", q}, {"omega", omega}, {"max_residual", res}});
  }
  d["sequence"] = rows;
  d["strictly_decreasing"] = decreasing;
  d["trend"] = decreasing ? "decreasing" : "not monotone";
  out.exit_code = decreasing ? kPass : kCheckFailed;
  return out;
}

}  // namespace cli
