#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "hahnvar/hahnvar.h"

namespace cli {

enum Exit : int {
  kPass = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kEvaluationError = 3,
  kNonConvergence = 4,
};

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

// Problems with what the user wrote map to 2; failures while computing to 3.
inline int exit_for(hv_status s) {
  switch (s) {
    case HV_ERR_INVALID_ARGUMENT:
    case HV_ERR_SYNTAX:
    case HV_ERR_UNKNOWN_IDENTIFIER:
    case HV_ERR_UNBOUND_VARIABLE:
    case HV_ERR_ARITY:
      return kInputError;
    default:
      return kEvaluationError;
  }
}

inline void check(hv_status s) {
  if (s == HV_OK) return;
  throw CliError(exit_for(s), std::string(hv_status_name(s)) + ": " + hv_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using Problem = std::unique_ptr<hv_problem, Deleter<hv_problem, hv_problem_free>>;
using Candidate = std::unique_ptr<hv_candidate, Deleter<hv_candidate, hv_candidate_free>>;
using Report = std::unique_ptr<hv_el_report, Deleter<hv_el_report, hv_el_report_free>>;
using MinResult =
    std::unique_ptr<hv_minimize_result, Deleter<hv_minimize_result, hv_minimize_result_free>>;

inline const char* origin_name(hv_origin o) {
  switch (o) {
    case HV_ORIGIN_A: return "a";
    case HV_ORIGIN_B: return "b";
    case HV_ORIGIN_OMEGA0: return "omega0";
  }
  return "?";
}

}  // namespace cli
