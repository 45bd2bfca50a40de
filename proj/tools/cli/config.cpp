#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "capi.hpp"

namespace cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw CliError(kInputError, "config: " + what); }

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) bad("unknown key '" + it.key() + "' in " + where);
}

double real(const json& v, const std::string& key) {
  if (!v.is_number()) bad("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad("'" + key + "' must be finite");
  return x;
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) bad("'" + key + "' must be an integer");
  const long long x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) bad("'" + key + "' is out of range");
  return static_cast<int>(x);
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) bad("'" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> reals(const json& v, const std::string& key) {
  if (!v.is_array()) bad("'" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const json& x : v) out.push_back(real(x, key));
  return out;
}

const json& required(const json& obj, const std::string& key) {
  if (!obj.contains(key)) bad("missing required key '" + key + "'");
  return obj.at(key);
}

hv_origin origin(const json& v) {
  const std::string name = text(v, "origin");
  if (name == "a") return HV_ORIGIN_A;
  if (name == "b") return HV_ORIGIN_B;
  if (name == "omega0") return HV_ORIGIN_OMEGA0;
  bad("table origin must be \"a\", \"b\" or \"omega0\", not \"" + name + "\"");
}

CandidateSpec table(const json& v) {
  if (!v.is_object()) bad("'candidate.table' must be an object");
  only_keys(v, {"rows", "omega0"}, "candidate.table");
  const json& rows = required(v, "rows");
  if (!rows.is_array()) bad("'candidate.table.rows' must be an array");
  CandidateSpec spec;
  spec.kind = CandidateSpec::Kind::Table;
  bool have_fixed = false;
  for (const json& row : rows) {
    if (!row.is_object()) bad("table rows must be objects");
    if (row.contains("t"))
      bad("table rows are keyed by (origin, n); raw t values are refused");
    only_keys(row, {"origin", "n", "value"}, "a table row");
    const hv_origin o = origin(required(row, "origin"));
    const double value = real(required(row, "value"), "value");
    if (o == HV_ORIGIN_OMEGA0) {
      if (row.contains("n") && integer(row.at("n"), "n") != 0) bad("omega0 rows take n = 0");
      if (have_fixed) bad("the value at omega0 is given twice");
      have_fixed = true;
      spec.omega0 = value;
      continue;
    }
    const int n = integer(required(row, "n"), "n");
    if (n < 0) bad("table index n must be non-negative");
    spec.points.push_back({o, n});
    spec.values.push_back(value);
  }
  if (v.contains("omega0")) {
    if (have_fixed) bad("the value at omega0 is given twice");
    spec.omega0 = real(v.at("omega0"), "omega0");
    have_fixed = true;
  }
  if (!have_fixed) bad("table candidates need the value at omega0");
  return spec;
}

CandidateSpec candidate(const json& v) {
  if (!v.is_object() || v.size() != 1)
    bad("'candidate' must be an object with exactly one of expr, builtin, table");
  only_keys(v, {"expr", "builtin", "table"}, "candidate");
  CandidateSpec spec;
  if (v.contains("expr")) {
    spec.kind = CandidateSpec::Kind::Expr;
    spec.text = text(v.at("expr"), "candidate.expr");
  } else if (v.contains("builtin")) {
    spec.kind = CandidateSpec::Kind::Builtin;
    spec.text = text(v.at("builtin"), "candidate.builtin");
  } else {
    spec = table(v.at("table"));
  }
  return spec;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  only_keys(doc,
            {"q", "omega", "a", "b", "r", "lagrangian", "alpha", "beta", "candidate", "depth",
             "tol", "max_terms", "include_omega0", "format"},
            "the run config");
  RunConfig c;
  c.q = real(required(doc, "q"), "q");
  c.omega = real(required(doc, "omega"), "omega");
  c.a = real(required(doc, "a"), "a");
  c.b = real(required(doc, "b"), "b");
  c.r = integer(required(doc, "r"), "r");
  c.lagrangian = text(required(doc, "lagrangian"), "lagrangian");
  c.alpha = reals(required(doc, "alpha"), "alpha");
  c.beta = reals(required(doc, "beta"), "beta");
  if (c.r < 1) bad("'r' must be positive");
  if (c.alpha.size() != static_cast<std::size_t>(c.r) ||
      c.beta.size() != static_cast<std::size_t>(c.r))
    bad("'alpha' and 'beta' must each hold exactly r values");
  if (doc.contains("candidate")) c.candidate = candidate(doc.at("candidate"));
  if (doc.contains("depth")) c.depth = integer(doc.at("depth"), "depth");
  if (doc.contains("tol")) c.tol = real(doc.at("tol"), "tol");
  if (doc.contains("max_terms")) c.max_terms = integer(doc.at("max_terms"), "max_terms");
  if (doc.contains("include_omega0")) {
    if (!doc.at("include_omega0").is_boolean()) bad("'include_omega0' must be true or false");
    c.include_omega0 = doc.at("include_omega0").get<bool>();
  }
  if (doc.contains("format")) {
    const std::string f = text(doc.at("format"), "format");
    if (f != "table" && f != "json" && f != "csv") bad("'format' must be table, json or csv");
    c.format = f;
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kInputError, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw CliError(kInputError, "config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

}  // namespace cli
