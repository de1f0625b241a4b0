#pragma once
#include <stdexcept>
#include <string>

namespace cosetcat {

// Every failure mode callers are expected to dispatch on gets its own code;
// the message carries the witness data in human-readable form.
enum class ErrCode {
  NotAGroup,
  DuplicateLabel,
  NotATransversal,
  MissingLeftInverse,
  AmbiguousGrade,
  AssumptionViolated,
  TauTildeMissing,
  AxiomViolation,
  DimensionMismatch,
  IntegralNotVerified,
  NotIrreducible,
  MissingHopfData,
  DualActionUndefined,
  InvalidInput,
};

class Error : public std::runtime_error {
public:
  Error(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  ErrCode code;
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) {
  throw Error(c, msg);
}

} // namespace cosetcat
