#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

enum class ErrorKind {
  kPoleProximity,
  kDomain,
  kNumericOverflow,
  kConvergence,
  kPrecondition,
};

const char* to_string(ErrorKind kind) noexcept;

// All kernel failures surface as this one exception type; `kind()` tells the
// caller which contract was broken.
class ZetaError : public std::runtime_error {
 public:
  ZetaError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw ZetaError(kind, what);
}

}  // namespace zetalab
