#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "config.hpp"
#include "render.hpp"

namespace cli {

/// Flags shared by every subcommand; each overrides the config value.
struct GlobalOptions {
  std::optional<std::string> format;
  std::optional<double> tol;
  std::optional<int> depth;
  std::optional<int> max_terms;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_iters;
  bool include_omega0 = false;
};

struct Outcome {
  Doc doc;
  int exit_code = 0;
  std::string diagnostics;  // written to stderr
  std::optional<std::string> config_format;
};

struct DerivArgs {
  std::string mode = "hahn";
  double q = 0.5;
  double omega = 0.5;
  std::string expr;
  double t = 0.0;
  int order = 1;
};

struct IntegrateArgs {
  std::string mode = "hahn";
  double q = 0.5;
  double omega = 0.5;
  std::string expr;
  double a = 0.0;
  double b = 1.0;
};

struct BeamArgs {
  double e = 1.0;
  double xi = 1.0;
};

Outcome cmd_deriv(const DerivArgs& args, const GlobalOptions& g);
Outcome cmd_integrate(const IntegrateArgs& args, const GlobalOptions& g);
Outcome cmd_el_check(const std::string& config_path, const GlobalOptions& g);
Outcome cmd_evaluate(const std::string& config_path, const GlobalOptions& g);
Outcome cmd_minimize(const std::string& config_path, const GlobalOptions& g, bool maximize);
Outcome cmd_demo_discontinuous_example(const GlobalOptions& g);
Outcome cmd_demo_beam(const BeamArgs& args, const GlobalOptions& g);

}  // namespace cli
