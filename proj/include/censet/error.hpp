#pragma once

#include <stdexcept>
#include <string>

namespace censet {

// Failure taxonomy shared by the whole library.  The CLI maps these onto
// process exit codes, so the distinction between "the input is malformed"
// and "the search space ran out" is load-bearing.
enum class ErrorKind {
  invalid_input,        // malformed data or a violated precondition
  wrong_algorithm,      // commutative routine invoked on a non-commutative semigroup
  truncation_too_small, // escalation would need sequence indices past T
  window_too_small,     // a bounded scan exhausted its window
  depth_too_small,      // chain refinement ran past the supplied depth
  infeasible,           // enumeration budget refusal (combinatorial blow-up)
  verification_failed,  // a freshly built object failed its own replay
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::wrong_algorithm: return "wrong-algorithm";
    case ErrorKind::truncation_too_small: return "truncation-too-small";
    case ErrorKind::window_too_small: return "window-too-small";
    case ErrorKind::depth_too_small: return "depth-too-small";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::verification_failed: return "verification-failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace censet
