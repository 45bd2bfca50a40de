#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "capi.hpp"
#include "commands.hpp"
#include "render.hpp"

int main(int argc, char** argv) {
  using namespace cli;

  CLI::App app{"Hahn quantum calculus and quantum variational problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hv_version()));

  GlobalOptions g;
  std::string format_flag;
  double tol = 0.0;
  int depth = 0;
  int max_terms = 0;
  std::uint64_t seed = 0;
  int max_iters = 0;
  auto* fmt_opt = app.add_option("--format", format_flag, "table, json or csv")
                      ->check(CLI::IsMember({"table", "json", "csv"}));
  auto* tol_opt = app.add_option("--tol", tol, "series or check tolerance");
  auto* depth_opt = app.add_option("--depth", depth, "lattice depth");
  auto* terms_opt = app.add_option("--max-terms", max_terms, "series term cap");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* iters_opt = app.add_option("--max-iters", max_iters, "minimizer iteration cap");
  app.add_flag("--include-omega0", g.include_omega0, "also check the E-L residual at omega0");

  DerivArgs deriv;
  auto* c_deriv = app.add_subcommand("deriv", "D^order f(t) of an expression of t");
  c_deriv->add_option("--mode", deriv.mode, "hahn, jackson or h")->capture_default_str();
  c_deriv->add_option("--q", deriv.q)->capture_default_str();
  c_deriv->add_option("--omega", deriv.omega, "omega, or step h in mode h")->capture_default_str();
  c_deriv->add_option("--expr", deriv.expr)->required();
  c_deriv->add_option("--t", deriv.t)->required();
  c_deriv->add_option("--order", deriv.order)->capture_default_str();

  IntegrateArgs integ;
  auto* c_int = app.add_subcommand("integrate", "integral of an expression of t from a to b");
  c_int->add_option("--mode", integ.mode, "hahn, jackson or h")->capture_default_str();
  c_int->add_option("--q", integ.q)->capture_default_str();
  c_int->add_option("--omega", integ.omega)->capture_default_str();
  c_int->add_option("--expr", integ.expr)->required();
  c_int->add_option("--a", integ.a)->required();
  c_int->add_option("--b", integ.b)->required();

  std::string config_path;
  auto* c_el = app.add_subcommand("el-check", "Euler-Lagrange report for a configured candidate");
  c_el->add_option("config", config_path, "JSON run config")->required();
  auto* c_eval = app.add_subcommand("evaluate", "functional value of a configured candidate");
  c_eval->add_option("config", config_path, "JSON run config")->required();
  bool maximize = false;
  auto* c_min = app.add_subcommand("minimize", "direct lattice minimization");
  c_min->add_option("config", config_path, "JSON run config")->required();
  c_min->add_flag("--maximize", maximize, "maximize instead (minimizes -L)");

  auto* c_demo = app.add_subcommand("demo", "built-in demonstrations");
  c_demo->require_subcommand(1);
  auto* c_example = c_demo->add_subcommand("paper-example", "discontinuous minimizer, q = omega = 1/2");
  BeamArgs beam;
  auto* c_beam = c_demo->add_subcommand("beam", "E-L residual trend of the clamped beam quartic");
  c_beam->add_option("--e", beam.e, "bending rigidity")->capture_default_str();
  c_beam->add_option("--xi", beam.xi, "load")->capture_default_str();

  for (CLI::App* sub : {c_deriv, c_int, c_el, c_eval, c_min, c_demo, c_example, c_beam})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*fmt_opt) g.format = format_flag;
  if (*tol_opt) g.tol = tol;
  if (*depth_opt) g.depth = depth;
  if (*terms_opt) g.max_terms = max_terms;
  if (*seed_opt) g.seed = seed;
  if (*iters_opt) g.max_iters = max_iters;

  try {
    Outcome out;
    if (*c_deriv)
      out = cmd_deriv(deriv, g);
    else if (*c_int)
      out = cmd_integrate(integ, g);
    else if (*c_el)
      out = cmd_el_check(config_path, g);
    else if (*c_eval)
      out = cmd_evaluate(config_path, g);
    else if (*c_min)
      out = cmd_minimize(config_path, g, maximize);
    else if (*c_example)
      out = cmd_demo_discontinuous_example(g);
    else
      out = cmd_demo_beam(beam, g);

    const std::string format = g.format.value_or(out.config_format.value_or("table"));
    std::cout << render(out.doc, parse_format(format));
    std::cout.flush();
    if (!out.diagnostics.empty()) std::cerr << "hahnvar-cli: " << out.diagnostics << '\n';
    return out.exit_code;
  } catch (const CliError& e) {
    std::cerr << "hahnvar-cli: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "hahnvar-cli: " << e.what() << '\n';
    return kEvaluationError;
  }
}
