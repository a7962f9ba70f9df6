#include "zetalab/error.hpp"

namespace zetalab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kPoleProximity: return "pole-proximity";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNumericOverflow: return "numeric-overflow";
    case ErrorKind::kConvergence: return "convergence";
    case ErrorKind::kPrecondition: return "precondition";
  }
  return "unknown";
}

}  // namespace zetalab
