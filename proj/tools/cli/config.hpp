#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hahnvar/hahnvar.h"

namespace cli {

struct CandidateSpec {
  enum class Kind { Expr, Builtin, Table };
  Kind kind = Kind::Expr;
  std::string text;  // expression or built-in name
  std::vector<hv_point> points;
  std::vector<double> values;
  double omega0 = 0.0;
};

struct RunConfig {
  double q = 0.0;
  double omega = 0.0;
  double a = 0.0;
  double b = 0.0;
  int r = 0;
  std::string lagrangian;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::optional<CandidateSpec> candidate;
  std::optional<int> depth;
  std::optional<double> tol;
  std::optional<int> max_terms;
  std::optional<bool> include_omega0;
  std::optional<std::string> format;
};

/// Strict schema: unknown or mistyped keys throw CliError with exit code 2.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace cli
