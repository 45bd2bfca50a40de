#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "variational/candidate.hpp"
#include "variational/demos.hpp"
#include "variational/euler_lagrange.hpp"
#include "variational/functional.hpp"
#include "variational/minimize.hpp"
#include "variational/problem.hpp"
#include "variational/trajectory.hpp"

using namespace hahnvar;
using doctest::Approx;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK(code_of([] { make_problem(0.5, 0.5, 1, 1.0, 0.0, {0}, {0}, "u1"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_problem(0.5, 0.5, 1, 0.0, 1.0, {0, 1}, {0}, "u1"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_problem(0.5, 0.5, 1, 0.0, 1.0, {0}, {0}, "u2"); }) ==
        ErrorCode::ArityError);
  CHECK(code_of([] { make_problem(0.5, 0.5, 1, 0.0, 1.0, {0}, {0}, "u1 +"); }) ==
        ErrorCode::SyntaxError);
  const Problem p = discontinuous_minimizer_problem();
  CHECK(p.r == 1);
  CHECK(p.params.omega0() == 1.0);
}

TEST_CASE("built-in candidates") {
  CHECK(ystar(-1.0) == 0.0);
  CHECK(ystar(0.0) == 1.0);
  CHECK(ystar(0.5) == -0.5);
  CHECK(ystar(1.0) == -1.0);
  CHECK(code_of([] { Candidate::builtin("nope"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Candidate::expression("u0 + t"); }) == ErrorCode::UnknownIdentifier);
}

TEST_CASE("trajectory examples") {
  const Problem p1 = make_problem(0.5, 0.5, 1, -1.0, 1.0, {-1}, {1}, "u1^2 / 2");
  const Lattice lat = p1.lattice(10);
  const Candidate id = Candidate::expression("t");
  const TrajectoryEvaluator ev(p1, lat, id);
  const LatticePoint a2{Origin::EndA, 2};
  const auto tr = ev.trajectory(a2);
  const double t = lat.realize(a2);
  REQUIRE(tr.size() == 3);
  CHECK(tr[0] == t);
  CHECK(tr[1] == Approx(p1.params.sigma(t)));
  // v_1 = D[y o sigma^(r-1)] = Dy when r = 1.
  CHECK(tr[2] == Approx(1.0));

  const Problem disc = discontinuous_minimizer_problem();
  const Lattice plat = disc.lattice(40);
  const Candidate ys = Candidate::builtin("ystar");
  const TrajectoryEvaluator pev(disc, plat, ys);
  const auto at0 = pev.trajectory({Origin::EndA, 1});
  CHECK(at0[0] == 0.0);
  CHECK(at0[1] == -0.5);
  CHECK(at0[2] == -3.0);

  const Problem p2 = make_problem(0.6, 0.3, 2, -2.0, 3.0, {4, 0}, {4, 0}, "u2^2");
  const Lattice lat2 = p2.lattice(12);
  const Candidate c = Candidate::expression("4");
  const TrajectoryEvaluator ev2(p2, lat2, c);
  for (const LatticePoint q : {LatticePoint{Origin::EndB, 3}, LatticePoint::fixed()}) {
    const auto v = ev2.trajectory(q);
    CHECK(v[1] == 4.0);
    CHECK(v[2] == Approx(0.0));
    CHECK(v[3] == Approx(0.0));
  }
  const Candidate table = Candidate::grid(GridFunction::sample(lat2, [](double) { return 4.0; }));
  const TrajectoryEvaluator ev3(p2, lat2, table);
  CHECK(ev3.trajectory({Origin::EndA, 10})[3] == Approx(0.0));
  CHECK(code_of([&] { ev3.trajectory({Origin::EndA, 11}); }) == ErrorCode::InsufficientDepth);
}

TEST_CASE("functional values") {
  const Problem disc = discontinuous_minimizer_problem();
  const SeriesResult at_star = functional_value(disc, Candidate::builtin("ystar"));
  CHECK(at_star.value == 0.0);

  const Problem one = make_problem(0.7, 0.4, 2, -1.0, 2.5, {0, 0}, {0, 0}, "1 + 0*u2");
  CHECK(functional_value(one, Candidate::expression("sin(t)")).value ==
        Approx(3.5).epsilon(1e-11));

  // Perturb y* at a[3] = 0.75; only the integrand at a[2] and a[3] changes.
  const Lattice lat = disc.lattice(40);
  GridFunction g = GridFunction::sample(lat, ystar);
  g.set({Origin::EndA, 3}, ystar(0.75) + 0.1);
  const SeriesResult perturbed = functional_value(disc, Candidate::grid(g));
  auto L = [](double u0, double u1) {
    return (u0 + 0.5) * (u0 + 0.5) * (u1 * u1 - 1) * (u1 * u1 - 1);
  };
  const double y3 = -0.65;
  const double f2 = L(y3, (y3 + 0.5) / 0.25);
  const double f3 = L(-0.875, (-0.875 - y3) / 0.125);
  // The b orbit is collapsed, so the integral is the weighted a-orbit sum.
  const double oracle = 0.25 * f2 + 0.125 * f3;
  CHECK(perturbed.value > 0.0);
  CHECK(perturbed.value == Approx(oracle).epsilon(1e-12));
}

TEST_CASE("admissibility and variations") {
  const Problem disc = discontinuous_minimizer_problem();
  CHECK(is_admissible(disc, Candidate::builtin("ystar")).ok);
  const BoundaryCheck zero = is_admissible(disc, Candidate::builtin("zero"));
  CHECK_FALSE(zero.ok);
  REQUIRE(zero.violations.size() == 1);
  CHECK(zero.violations[0].endpoint == Origin::EndB);
  CHECK(zero.violations[0].error == 1.0);

  const Problem self = make_problem(0.8, 0.1, 1, -0.3, 2.0, {std::exp(-0.3)}, {std::exp(2.0)}, "u1");
  CHECK(is_admissible(self, Candidate::expression("exp(t)")).ok);

  CHECK(is_variation(disc, Candidate::builtin("zero")).ok);
  const Problem r1 = make_problem(0.6, 0.2, 1, 0.0, 3.0, {0}, {0}, "u1^2");
  CHECK(is_variation(r1, Candidate::expression("(t - 0) * (t - 3)")).ok);
  const Problem r2 = make_problem(0.6, 0.2, 2, 0.0, 3.0, {0, 0}, {0, 0}, "u2^2");
  const BoundaryCheck bad = is_variation(r2, Candidate::expression("(t - 0) * (t - 3)"));
  CHECK_FALSE(bad.ok);
  // D eta(a) = (a - b) + ((q - 1) a + omega) for eta = (t - a)(t - b).
  bool saw_a = false;
  for (const auto& v : bad.violations)
    if (v.index == 1 && v.endpoint == Origin::EndA) {
      saw_a = true;
      CHECK(v.error == Approx(std::abs(-3.0 + 0.2)).epsilon(1e-12));
    }
  CHECK(saw_a);
}

TEST_CASE("variation closure under sigma") {
  const Problem r2 = make_problem(0.6, 0.2, 2, 0.0, 3.0, {0, 0}, {0, 0}, "u2^2");
  const Problem r1 = make_problem(0.6, 0.2, 1, 0.0, 3.0, {0}, {0}, "u1^2");
  const Lattice lat = r2.lattice(15);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  GridFunction eta(lat), shifted(lat);
  for (const Origin o : {Origin::EndA, Origin::EndB})
    for (int n = 0; n <= 15; ++n) eta.set({o, n}, n <= 2 ? 0.0 : uni(rng));
  eta.set(LatticePoint::fixed(), uni(rng));
  for (const Origin o : {Origin::EndA, Origin::EndB})
    for (int n = 0; n < 15; ++n) shifted.set({o, n}, eta.at({o, n + 1}));
  shifted.set(LatticePoint::fixed(), eta.value_at_fixed());
  CHECK(is_variation(r2, Candidate::grid(eta)).ok);
  CHECK(is_variation(r1, Candidate::grid(shifted)).ok);
}

TEST_CASE("first variation") {
  const Problem lin = make_problem(0.6, 0.3, 2, -1.0, 2.0, {0, 0}, {0, 0}, "u2");
  const Candidate eta = Candidate::expression("(t + 1) * (t - 2) * (t + 0.3) * (t - 1.5) * t");
  // eta above vanishes at a, sigma(a), b, sigma(b), so D eta vanishes at both ends.
  REQUIRE(is_variation(lin, eta).ok);
  CHECK(std::abs(first_variation(lin, Candidate::expression("t^3"), eta).value) <= 1e-10);

  const Problem disc = discontinuous_minimizer_problem();
  const Candidate ys = Candidate::builtin("ystar");
  const Candidate v = Candidate::expression("(t + 1) * (t - 1) * exp(t)");
  CHECK(std::abs(first_variation(disc, ys, v).value) <= 1e-9);
  CHECK(std::abs(first_variation_fd(disc, ys, v)) <= 1e-8);
  CHECK(first_variation_fd(disc, ys, Candidate::builtin("zero")) == 0.0);

  const Problem one = make_problem(0.5, 0.5, 1, -1.0, 1.0, {0}, {0}, "1 + 0*u1");
  CHECK(std::abs(first_variation_fd(one, ys, v)) <= 1e-9);

  CHECK(code_of([&] { first_variation(disc, ys, Candidate::expression("t")); }) ==
        ErrorCode::NotAVariation);
  CHECK(code_of([&] { first_variation_fd(disc, ys, v, 0.0); }) == ErrorCode::InvalidArgument);

  const Problem poly = make_problem(0.7, 0.2, 1, -1.0, 2.0, {0}, {0}, "t * u0^2 + u1^3 / 3 + u0 * u1");
  const Candidate y = Candidate::expression("sin(t)");
  const Candidate w = Candidate::expression("(t + 1) * (t - 2) * cos(t)");
  const double fv = first_variation(poly, y, w).value;
  const double fd = first_variation_fd(poly, y, w);
  CHECK(std::abs(fv - fd) <= 1e-6 * (1 + std::abs(fd)));
}

TEST_CASE("Euler-Lagrange residuals") {
  const Problem free_particle = make_problem(0.5, 0.5, 1, -1.0, 1.0, {-1}, {1}, "u1^2 / 2");
  const Candidate id = Candidate::expression("t");
  CHECK(std::abs(el_residual(free_particle, id, {Origin::EndA, 4})) <= 1e-12);

  const Problem disc = discontinuous_minimizer_problem();
  const Candidate ys = Candidate::builtin("ystar");
  for (int n = 0; n <= 38; ++n) CHECK(std::abs(el_residual(disc, ys, {Origin::EndA, n})) <= 1e-9);

  const Problem poly = make_problem(0.7, 0.2, 1, -1.0, 2.0, {0}, {0}, "t * u0^2 + u1^3 / 3");
  const Lattice lat = poly.lattice(20);
  const Candidate y = Candidate::expression("exp(t) - t^2");
  for (const Origin o : {Origin::EndA, Origin::EndB})
    for (int n = 0; n <= 10; ++n) {
      const LatticePoint p{o, n};
      CHECK(el_residual(poly, lat, y, p) ==
            Approx(-el_residual_first_order(poly, lat, y, p)).epsilon(1e-12));
    }
  CHECK(code_of([&] { el_residual(poly, poly.lattice(5), y, {Origin::EndA, 4}); }) ==
        ErrorCode::InsufficientDepth);
}

TEST_CASE("Euler-Lagrange reports") {
  const Problem disc = discontinuous_minimizer_problem();
  const ElReport rep = el_report(disc, Candidate::builtin("ystar"), 40);
  CHECK(rep.passes());
  CHECK(rep.max_abs_residual <= 1e-9);
  CHECK(rep.boundary_violations.empty());
  CHECK(rep.depth_used == 38);
  CHECK_FALSE(rep.omega0_residual.has_value());

  const ElReport zero = el_report(disc, Candidate::builtin("zero"), 20);
  CHECK_FALSE(zero.passes());
  REQUIRE(zero.boundary_violations.size() == 1);
  CHECK(zero.boundary_violations[0].endpoint == Origin::EndB);

  const Problem free_particle = make_problem(0.6, 0.3, 1, -1.0, 2.0, {-1}, {2}, "u1^2 / 2");
  const ElReport lin = el_report(free_particle, Candidate::expression("t"), 15, 1e-9, true);
  CHECK(lin.passes());
  CHECK(lin.residuals.size() == 2 * 14);
  double worst = 0.0;
  for (const auto& [point, value] : lin.residuals) worst = std::max(worst, std::abs(value));
  CHECK(worst == lin.max_abs_residual);
  REQUIRE(lin.omega0_residual.has_value());
  CHECK(std::abs(*lin.omega0_residual) <= 1e-7);
}

TEST_CASE("limit-case residuals") {
  const Problem fp = make_problem(0.5, 0.25, 1, 1.0, 2.0, {1}, {2}, "u1^2 / 2");
  const Candidate id = Candidate::expression("t");
  CHECK(std::abs(q_el_residual(fp, id, {Origin::EndB, 3})) <= 1e-12);
  CHECK(std::abs(h_el_residual(fp, id, {Origin::EndA, 3})) <= 1e-12);

  const Problem lin = make_problem(0.5, 0.25, 1, 1.0, 2.0, {3}, {3}, "u0");
  CHECK(q_el_residual(lin, Candidate::expression("3"), {Origin::EndA, 2}) == Approx(1.0));

  // Delta_h^2 y = 1 is solved by y = t (t - h) / 2.
  const double h = 0.125;
  const Problem classical = make_problem(0.5, h, 1, 0.0, 1.0, {0}, {0.4375}, "u1^2 / 2 + u0");
  const Candidate y = Candidate::expression("t * (t - 0.125) / 2");
  for (int n = 0; n <= 8; ++n) {
    CHECK(std::abs(h_el_residual(classical, y, {Origin::EndA, n})) <= 1e-12);
    CHECK(std::abs(h_el_residual(classical, y, {Origin::EndB, n})) <= 1e-12);
  }
}

TEST_CASE("scaling of the Lagrangian") {
  const Problem base = make_problem(0.7, 0.2, 2, -1.0, 2.0, {0, 0}, {0, 0}, "t * u0^2 + u1 * u2 + u2^2");
  const Problem scaled = make_problem(0.7, 0.2, 2, -1.0, 2.0, {0, 0}, {0, 0},
                                      "3.5 * (t * u0^2 + u1 * u2 + u2^2)");
  const Candidate y = Candidate::expression("cos(t) + t^3");
  CHECK(functional_value(scaled, y).value ==
        Approx(3.5 * functional_value(base, y).value).epsilon(1e-13));
  for (int n = 0; n <= 6; ++n) {
    const LatticePoint p{Origin::EndB, n};
    CHECK(el_residual(scaled, y, p) == Approx(3.5 * el_residual(base, y, p)).epsilon(1e-12));
  }
}

TEST_CASE("direct minimizer") {
  const Problem quad = make_problem(0.5, 0.5, 1, 0.0, 1.0, {0}, {0}, "u1^2");
  MinimizeOptions o;
  o.seed = 3;
  const MinimizeResult r = minimize_direct(quad, o);
  CHECK(r.converged);
  CHECK(r.objective <= 1e-6);
  for (double v : r.best.flatten()) CHECK(std::abs(v) <= 1e-6);
  for (std::size_t i = 1; i < r.history.size(); ++i)
    if (r.history[i].penalty_weight == r.history[i - 1].penalty_weight)
      CHECK(r.history[i].objective <= r.history[i - 1].objective);

  const MinimizeResult again = minimize_direct(quad, o);
  REQUIRE(again.history.size() == r.history.size());
  for (std::size_t i = 0; i < r.history.size(); ++i)
    CHECK(again.history[i].objective == r.history[i].objective);
  CHECK(again.best.flatten() == r.best.flatten());

  // A positive multiple of L has the same minimizer.
  const Problem quad3 = make_problem(0.5, 0.5, 1, 0.0, 1.0, {0}, {0}, "3 * u1^2");
  const MinimizeResult r3 = minimize_direct(quad3, o);
  CHECK(r3.converged);
  for (double v : r3.best.flatten()) CHECK(std::abs(v) <= 1e-6);

  // Maximizing -u1^2 is the same problem.
  Problem neg = make_problem(0.5, 0.5, 1, 0.0, 1.0, {0}, {0}, "0 - u1^2");
  neg.maximize = true;
  const MinimizeResult rn = minimize_direct(neg, o);
  CHECK(rn.objective >= -1e-6);
  CHECK(rn.objective <= 0.0);

  MinimizeOptions shallow = o;
  shallow.depth = 3;
  CHECK(code_of([&] { minimize_direct(quad, shallow); }) == ErrorCode::InvalidArgument);

  // Hopeless Lagrangians still come back finite.
  const Problem wild = make_problem(0.5, 0.5, 1, 0.0, 1.0, {5}, {-5}, "exp(u1)");
  MinimizeOptions brief = o;
  brief.max_iters = 200;
  const MinimizeResult rw = minimize_direct(wild, brief);
  CHECK(std::isfinite(rw.objective));
  CHECK(std::isfinite(rw.max_boundary_error));
}

TEST_CASE("nonnegativity sweep of the discontinuous example") {
  const Problem disc = discontinuous_minimizer_problem();
  const NonnegativitySweep s = nonnegativity_sweep(disc, 100, 5);
  CHECK(s.count == 100);
  CHECK(s.negative == 0);
  CHECK(s.min_value >= -1e-10);

  std::mt19937_64 rng(1);
  const Lattice lat = disc.lattice(20);
  const GridFunction g = random_admissible_grid(disc, lat, rng);
  CHECK(is_admissible(disc, Candidate::grid(g)).ok);

  const Problem r2 = make_problem(0.6, 0.3, 2, -1.0, 2.0, {1, -2}, {0.5, 3}, "u2^2");
  const Lattice lat2 = r2.lattice(20);
  const GridFunction g2 = random_admissible_grid(r2, lat2, rng);
  CHECK(is_admissible(r2, Candidate::grid(g2)).ok);
}

TEST_CASE("beam quartic residuals shrink toward the classical limit") {
  CHECK(beam_quartic(2.0, 3.0, 0.0) == 0.0);
  CHECK(beam_quartic(2.0, 3.0, 1.0) == Approx(3.0 / (24.0 * 4.0)));
  double previous = INFINITY;
  for (const auto& [q, w] : default_beam_sequence()) {
    const double r = beam_max_residual(q, w, 1.0, 1.0);
    CHECK(r < previous);
    previous = r;
  }
}
