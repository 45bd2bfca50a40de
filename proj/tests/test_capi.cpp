#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "hahnvar/hahnvar.h"

using doctest::Approx;

TEST_CASE("calculus entry points") {
  double out = 0.0;
  CHECK(hv_omega0(0.5, 0.5, &out) == HV_OK);
  CHECK(out == 1.0);
  CHECK(hv_sigma(0.5, 0.5, 2.0, &out) == HV_OK);
  CHECK(out == 1.5);
  CHECK(hv_omega0(1.0, 0.5, &out) == HV_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(hv_last_error()) > 0);
  CHECK(hv_omega0(0.5, 0.5, nullptr) == HV_ERR_INVALID_ARGUMENT);

  CHECK(hv_eval_expr("t^2 + 1", 3.0, &out) == HV_OK);
  CHECK(out == 10.0);
  CHECK(hv_deriv(HV_MODE_HAHN, 0.5, 0.5, "t^2", 1, 2.0, &out) == HV_OK);
  CHECK(out == Approx(3.5));
  CHECK(hv_deriv(HV_MODE_JACKSON, 0.5, 0.0, "t^3", 2, 2.0, &out) == HV_OK);
  // D_q^2 t^3 = [3][2] t.
  CHECK(out == Approx(1.75 * 1.5 * 2.0));
  CHECK(hv_deriv(HV_MODE_FORWARD, 0.0, 0.1, "t^2", 2, 1.0, &out) == HV_OK);
  CHECK(out == Approx(2.0));
  CHECK(hv_deriv(HV_MODE_HAHN, 0.5, 0.5, "t", -1, 0.0, &out) == HV_ERR_INVALID_ARGUMENT);

  hv_series s{};
  CHECK(hv_integrate(HV_MODE_HAHN, 0.5, 0.5, "t", 1.0, 2.0, 1e-12, 10000, &s) == HV_OK);
  CHECK(s.value == Approx(5.0 / 3.0).epsilon(1e-11));
  CHECK(s.converged == 1);
  CHECK(s.tail_bound <= 1e-12);
  CHECK(hv_integrate(HV_MODE_JACKSON, 0.5, 0.0, "t", 0.0, 1.0, 1e-12, 10000, &s) == HV_OK);
  CHECK(s.value == Approx(1.0 / 1.5));
  CHECK(hv_integrate(HV_MODE_HAHN, 0.9, 0.1, "t", 1.0, 2.0, 1e-12, 3, &s) == HV_OK);
  CHECK(s.converged == 0);
}

TEST_CASE("error codes and positions") {
  double out = 0.0;
  CHECK(hv_eval_expr("(t", 0.0, &out) == HV_ERR_SYNTAX);
  CHECK(hv_last_error_position() == 2);
  CHECK(std::string(hv_last_error()).find("position 2") != std::string::npos);
  CHECK(hv_eval_expr("foo", 0.0, &out) == HV_ERR_UNKNOWN_IDENTIFIER);
  CHECK(hv_last_error_position() == -1);
  CHECK(hv_eval_expr("ln(t)", 0.0, &out) == HV_ERR_DOMAIN);
  CHECK(hv_eval_expr("u0", 0.0, &out) == HV_ERR_UNKNOWN_IDENTIFIER);
  CHECK(std::string(hv_status_name(HV_ERR_ARITY)) == "ArityError");
  CHECK(std::string(hv_status_name(HV_OK)) == "Ok");
  CHECK(std::string(hv_version()) == "1.0.0");
  CHECK(hv_eval_expr("t", 0.0, &out) == HV_OK);
  CHECK(std::string(hv_last_error()).empty());
}

TEST_CASE("problems, candidates and reports") {
  hv_problem* p = nullptr;
  REQUIRE(hv_problem_discontinuous_example(&p) == HV_OK);
  int r = 0;
  double w0 = 0.0;
  CHECK(hv_problem_order(p, &r) == HV_OK);
  CHECK(r == 1);
  CHECK(hv_problem_omega0(p, &w0) == HV_OK);
  CHECK(w0 == 1.0);
  double t = 0.0;
  CHECK(hv_problem_point(p, hv_point{HV_ORIGIN_A, 2}, &t) == HV_OK);
  CHECK(t == 0.5);

  hv_candidate* ys = nullptr;
  REQUIRE(hv_candidate_builtin("ystar", &ys) == HV_OK);
  double v[3] = {};
  CHECK(hv_trajectory(p, ys, hv_point{HV_ORIGIN_A, 1}, 40, v, 3) == HV_OK);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == -0.5);
  CHECK(v[2] == -3.0);
  CHECK(hv_trajectory(p, ys, hv_point{HV_ORIGIN_A, 1}, 40, v, 2) == HV_ERR_INVALID_ARGUMENT);

  hv_series s{};
  CHECK(hv_functional_value(p, ys, 1e-12, 10000, &s) == HV_OK);
  CHECK(s.value == 0.0);
  int ok = 0;
  size_t nviol = 9;
  CHECK(hv_is_admissible(p, ys, 1e-9, &ok, &nviol) == HV_OK);
  CHECK(ok == 1);
  CHECK(nviol == 0);

  hv_el_report* rep = nullptr;
  REQUIRE(hv_el_report_create(p, ys, 40, 1e-9, 0, &rep) == HV_OK);
  hv_el_summary sum{};
  CHECK(hv_el_report_summary(rep, &sum) == HV_OK);
  CHECK(sum.passes == 1);
  CHECK(sum.max_abs_residual <= 1e-9);
  CHECK(sum.residual_count == 39);
  CHECK(sum.violation_count == 0);
  hv_point pt{};
  double res = 1.0;
  CHECK(hv_el_report_residual(rep, 0, &pt, &t, &res) == HV_OK);
  CHECK(pt.origin == HV_ORIGIN_A);
  CHECK(t == -1.0);
  CHECK(hv_el_report_residual(rep, 39, &pt, &t, &res) == HV_ERR_INVALID_ARGUMENT);
  hv_el_report_free(rep);

  hv_candidate* zero = nullptr;
  REQUIRE(hv_candidate_builtin("zero", &zero) == HV_OK);
  REQUIRE(hv_el_report_create(p, zero, 10, 1e-9, 0, &rep) == HV_OK);
  CHECK(hv_el_report_summary(rep, &sum) == HV_OK);
  CHECK(sum.passes == 0);
  REQUIRE(sum.violation_count == 1);
  hv_violation viol{};
  CHECK(hv_el_report_violation(rep, 0, &viol) == HV_OK);
  CHECK(viol.endpoint == HV_ORIGIN_B);
  CHECK(viol.error == 1.0);
  hv_el_report_free(rep);

  hv_candidate* bump = nullptr;
  REQUIRE(hv_candidate_from_expr("(t + 1) * (t - 1)", &bump) == HV_OK);
  CHECK(hv_is_variation(p, bump, 1e-9, &ok, &nviol) == HV_OK);
  CHECK(ok == 1);
  CHECK(hv_first_variation(p, ys, bump, 1e-12, 10000, &s) == HV_OK);
  CHECK(std::abs(s.value) <= 1e-9);
  double fd = 1.0;
  CHECK(hv_first_variation_fd(p, ys, bump, 1e-5, 1e-12, 10000, &fd) == HV_OK);
  CHECK(std::abs(fd) <= 1e-8);
  CHECK(hv_first_variation(p, ys, zero, 1e-12, 10000, &s) == HV_OK);
  hv_candidate* line = nullptr;
  REQUIRE(hv_candidate_from_expr("t", &line) == HV_OK);
  CHECK(hv_first_variation(p, ys, line, 1e-12, 10000, &s) == HV_ERR_NOT_A_VARIATION);

  double el = 1.0;
  CHECK(hv_el_residual(p, ys, HV_MODE_HAHN, hv_point{HV_ORIGIN_A, 5}, 40, &el) == HV_OK);
  CHECK(std::abs(el) <= 1e-9);
  CHECK(hv_el_residual(p, ys, HV_MODE_HAHN, hv_point{HV_ORIGIN_A, 39}, 40, &el) ==
        HV_ERR_INSUFFICIENT_DEPTH);

  double minv = 0.0;
  int neg = -1;
  CHECK(hv_nonnegativity_sweep(p, 20, 3, 20, &minv, &neg) == HV_OK);
  CHECK(neg == 0);
  CHECK(minv >= -1e-10);

  hv_candidate_free(line);
  hv_candidate_free(bump);
  hv_candidate_free(zero);
  hv_candidate_free(ys);
  hv_problem_free(p);
  hv_problem_free(nullptr);
  hv_candidate_free(nullptr);
}

TEST_CASE("problem construction errors") {
  hv_problem* p = nullptr;
  const double zero[1] = {0.0};
  CHECK(hv_problem_create(0.5, 0.5, 1, 0.0, 1.0, zero, zero, "u2", 0, &p) == HV_ERR_ARITY);
  CHECK(p == nullptr);
  CHECK(hv_problem_create(0.5, 0.5, 1, 1.0, 0.0, zero, zero, "u1", 0, &p) ==
        HV_ERR_INVALID_ARGUMENT);
  CHECK(hv_problem_create(0.5, 0.5, 1, 0.0, 1.0, zero, zero, "u1 *", 0, &p) == HV_ERR_SYNTAX);
  CHECK(hv_last_error_position() == 4);
  CHECK(hv_problem_create(0.5, 0.5, 1, 0.0, 1.0, nullptr, zero, "u1", 0, &p) ==
        HV_ERR_INVALID_ARGUMENT);
  hv_candidate* c = nullptr;
  CHECK(hv_candidate_builtin("nope", &c) == HV_ERR_INVALID_ARGUMENT);
  CHECK(hv_candidate_from_expr("u1", &c) == HV_ERR_UNKNOWN_IDENTIFIER);
}

TEST_CASE("table candidates") {
  hv_problem* p = nullptr;
  const double zero[1] = {0.0};
  REQUIRE(hv_problem_create(0.5, 0.5, 1, 0.0, 2.0, zero, zero, "u1^2", 0, &p) == HV_OK);
  const int depth = 6;
  std::vector<hv_point> pts;
  std::vector<double> vals;
  for (hv_origin o : {HV_ORIGIN_A, HV_ORIGIN_B})
    for (int n = 0; n <= depth; ++n) {
      pts.push_back({o, n});
      double t = 0.0;
      REQUIRE(hv_problem_point(p, hv_point{o, n}, &t) == HV_OK);
      vals.push_back(t * (2.0 - t));
    }
  hv_candidate* c = nullptr;
  REQUIRE(hv_candidate_from_table(p, depth, pts.data(), vals.data(), pts.size(), 1.0, &c) ==
          HV_OK);
  double v = 0.0;
  CHECK(hv_candidate_value(p, c, hv_point{HV_ORIGIN_B, 3}, &v) == HV_OK);
  CHECK(v == vals[depth + 1 + 3]);
  CHECK(hv_candidate_value(p, c, hv_point{HV_ORIGIN_OMEGA0, 0}, &v) == HV_OK);
  CHECK(v == 1.0);
  int ok = 0;
  size_t nv = 0;
  CHECK(hv_is_admissible(p, c, 1e-9, &ok, &nv) == HV_OK);
  CHECK(ok == 1);
  hv_candidate_free(c);

  CHECK(hv_candidate_from_table(p, depth, pts.data(), vals.data(), pts.size() - 1, 1.0, &c) ==
        HV_ERR_INVALID_ARGUMENT);
  pts[1] = pts[0];
  CHECK(hv_candidate_from_table(p, depth, pts.data(), vals.data(), pts.size(), 1.0, &c) ==
        HV_ERR_INVALID_ARGUMENT);
  hv_problem_free(p);
}

TEST_CASE("minimizer handles") {
  hv_problem* p = nullptr;
  const double zero[1] = {0.0};
  REQUIRE(hv_problem_create(0.5, 0.5, 1, 0.0, 1.0, zero, zero, "u1^2", 0, &p) == HV_OK);
  hv_minimize_result* m = nullptr;
  REQUIRE(hv_minimize(p, 12, 7, 5000, 1e-12, 10000, &m) == HV_OK);
  hv_minimize_summary sum{};
  CHECK(hv_minimize_summary_get(m, &sum) == HV_OK);
  CHECK(sum.converged == 1);
  CHECK(sum.objective <= 1e-6);
  CHECK(sum.point_count == 13 + 1);  // b = omega0 collapses
  REQUIRE(sum.history_length > 0);
  hv_history_entry h{};
  CHECK(hv_minimize_history(m, 0, &h) == HV_OK);
  CHECK(hv_minimize_history(m, sum.history_length, &h) == HV_ERR_INVALID_ARGUMENT);
  hv_point pt{};
  double t = 0.0, v = 1.0;
  CHECK(hv_minimize_point(m, sum.point_count - 1, &pt, &t, &v) == HV_OK);
  CHECK(pt.origin == HV_ORIGIN_OMEGA0);
  CHECK(t == 1.0);
  CHECK(std::abs(v) <= 1e-6);
  hv_minimize_result_free(m);
  CHECK(hv_minimize(p, 3, 7, 5000, 1e-12, 10000, &m) == HV_ERR_INVALID_ARGUMENT);
  hv_problem_free(p);

  double beam = 0.0;
  CHECK(hv_beam_max_residual(0.9, 0.1, 1.0, 1.0, &beam) == HV_OK);
  CHECK(beam > 0.0);
}
