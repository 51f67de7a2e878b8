#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leavitt {

enum class Errc {
  kDuplicateId,
  kDanglingEndpoint,
  kEmptyVertexSet,
  kUnknownId,
  kInvalidId,
  kInvalidInput,
  kCapExceeded,
  kNullForm,
  kPointNotInDomain,
  kDomainViolation,
  kConditionLViolated,
  kZeroInput,
  kCriteriaNotMet,
  kGraphHasCycle,
  kSyntaxError,
  kPrecondition,
  kFieldMismatch,
  kDivisionByZero,
  kInternal,
};

std::string_view errc_name(Errc code);

// Every domain failure surfaces as this exception; `code()` is stable for
// tests and for the CLI's exit-status mapping.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Runtime guard for invariants the algorithms rely on. Failure means a
// transcription bug, never bad user input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(Errc::kInternal, std::string("internal assertion failed: ") + what);
}

}  // namespace leavitt
