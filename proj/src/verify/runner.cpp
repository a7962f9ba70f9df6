#include <algorithm>
#include <cmath>
#include <cstdio>

#include "checks.hpp"

namespace zetalab::verify {
namespace {

const std::vector<detail::Entry>& entries() {
  static const std::vector<detail::Entry> all = [] {
    std::vector<detail::Entry> out;
    detail::add_kernel_checks(out);
    detail::add_integral_checks(out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.spec.id < b.spec.id; });
    return out;
  }();
  return all;
}

num::Real distance(const Value& a, const Value& b) {
  if (const auto* x = std::get_if<num::Complex>(&a)) return std::abs(*x - std::get<num::Complex>(b));
  const auto& p = std::get<exact::BigRational>(a);
  const auto& q = std::get<exact::BigRational>(b);
  return p == q ? 0 : std::fabs((p - q).to_real());
}

CheckResult run_one(const detail::Entry& e, const num::PrecisionConfig& cfg) {
  CheckResult r;
  r.id = e.spec.id;
  r.description = e.spec.description;
  r.paper_anchor = e.spec.paper_anchor;
  r.tolerance = e.spec.tolerance;
  if (e.spec.exact) {
    r.lhs = r.rhs = exact::BigRational(0);
  } else {
    r.lhs = r.rhs = num::Complex(0);
  }
  // A tolerance tighter than the default target is fine under the default
  // config; a user-loosened target makes such checks meaningless.
  const num::Real required = std::max(e.spec.tolerance, num::default_config().target_abs_error);
  if (!e.spec.exact && cfg.target_abs_error > required) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "precision target %.3Lg is looser than the check tolerance %.3Lg",
                  cfg.target_abs_error, e.spec.tolerance);
    r.reason = buf;
    return r;
  }
  try {
    auto outcome = e.run(cfg);
    r.lhs = std::move(outcome.lhs);
    r.rhs = std::move(outcome.rhs);
  } catch (const ZetaError& err) {
    r.reason = std::string(to_string(err.kind())) + ": " + err.what();
    return r;
  }
  r.abs_error = distance(r.lhs, r.rhs);
  const bool ok = e.spec.exact ? std::get<exact::BigRational>(r.lhs) == std::get<exact::BigRational>(r.rhs)
                               : r.abs_error <= r.tolerance;
  r.status = ok ? Status::kPass : Status::kFail;
  return r;
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> out;
    for (const auto& e : entries()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

std::vector<CheckResult> run_checks(std::string_view filter, const num::PrecisionConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> out;
  for (const auto& e : entries()) {
    if (e.spec.id.starts_with(filter)) out.push_back(run_one(e, cfg));
  }
  return out;
}

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::kPass: ++s.passed; break;
      case Status::kFail: ++s.failed; break;
      case Status::kSkipped: ++s.skipped; break;
    }
  }
  return s;
}

int exit_code(const std::vector<CheckResult>& results) { return summarize(results).failed == 0 ? 0 : 1; }

}  // namespace zetalab::verify
