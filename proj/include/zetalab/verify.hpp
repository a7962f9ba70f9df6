#pragma once

// Identity registry and check runner behind `zetalab verify`.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetalab/exact.hpp"
#include "zetalab/zeta_num.hpp"

namespace zetalab::verify {

using Value = std::variant<num::Complex, exact::BigRational>;

struct CheckSpec {
  std::string id;
  std::string description;
  std::string paper_anchor;  // which identity the check exercises
  std::map<std::string, std::string> parameters;
  num::Real tolerance = 0;  // ignored for exact checks
  bool exact = false;
};

enum class Status { kPass, kFail, kSkipped };

const char* to_string(Status s) noexcept;

struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_anchor;
  Value lhs;
  Value rhs;
  num::Real abs_error = 0;
  num::Real tolerance = 0;
  Status status = Status::kSkipped;
  std::string reason;  // set for skipped checks
};

/// Every registered check, sorted by id.
const std::vector<CheckSpec>& registry();

/// Runs every check whose id starts with `filter` (all when empty), results
/// sorted by id. Kernel errors turn into skipped results; so does a
/// configured precision target looser than a check's tolerance.
std::vector<CheckResult> run_checks(std::string_view filter = {},
                                    const num::PrecisionConfig& cfg = num::default_config());

enum class Format { kText, kJson };

std::string render_report(const std::vector<CheckResult>& results, Format format,
                          const num::PrecisionConfig& cfg = num::default_config());

struct Summary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

Summary summarize(const std::vector<CheckResult>& results);

/// 0 iff nothing failed.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace zetalab::verify
