#include <doctest.h>

#include <set>
#include <string>

#include <json.hpp>

#include "zetalab/verify.hpp"

namespace verify = zetalab::verify;
namespace num = zetalab::num;
using verify::Status;

namespace {

const std::vector<verify::CheckResult>& full_run() {
  static const auto results = verify::run_checks();
  return results;
}

bool has_prefix(const std::string& prefix) {
  for (const auto& spec : verify::registry()) {
    if (spec.id.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("registry covers every identity family") {
    for (const char* p : {"prop1.", "prop2.", "prop3.", "prop4.", "cor1.", "cor2.", "cor3.", "cor4.", "cor5.",
                          "cor6.", "cor7.", "cor8.", "cor9.", "note.", "pair.", "pole.", "kernel.", "intro."}) {
      CAPTURE(p);
      CHECK(has_prefix(p));
    }
    std::set<std::string> ids;
    for (const auto& spec : verify::registry()) {
      CHECK(ids.insert(spec.id).second);
      CHECK_FALSE(spec.description.empty());
      CHECK_FALSE(spec.paper_anchor.empty());
      if (!spec.exact) CHECK(spec.tolerance > 0);
    }
    CHECK(std::is_sorted(verify::registry().begin(), verify::registry().end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
  }

  TEST_CASE("every check passes under the default configuration") {
    const auto& results = full_run();
    CHECK(results.size() == verify::registry().size());
    for (const auto& r : results) {
      CAPTURE(r.id);
      CAPTURE(r.reason);
      CHECK(r.status == Status::kPass);
      CHECK(r.abs_error <= r.tolerance);
    }
    CHECK(verify::exit_code(results) == 0);
  }

  TEST_CASE("filters select by id prefix") {
    const auto cor6 = verify::run_checks("cor6");
    REQUIRE_FALSE(cor6.empty());
    for (const auto& r : cor6) {
      CHECK(r.id.rfind("cor6", 0) == 0);
      CHECK(r.status == Status::kPass);
      CHECK(r.abs_error == 0);
    }
    CHECK(verify::run_checks("zzz").empty());
  }

  TEST_CASE("text and JSON reports") {
    const std::string empty = verify::render_report({}, verify::Format::kText);
    CHECK(empty.find("0 passed, 0 failed") != std::string::npos);

    const auto prop2 = verify::run_checks("prop2");
    const std::string text = verify::render_report(prop2, verify::Format::kText);
    CHECK(text.find("prop2.fd.0") != std::string::npos);
    CHECK(text.find(std::to_string(prop2.size()) + " passed, 0 failed") != std::string::npos);

    const auto json = nlohmann::json::parse(verify::render_report(prop2, verify::Format::kJson));
    CHECK(json["summary"]["failed"] == 0);
    CHECK(json["summary"]["passed"] == prop2.size());
    CHECK(json["checks"].size() == prop2.size());
    CHECK(json["checks"][0]["lhs"].is_string());
    CHECK(verify::render_report(prop2, verify::Format::kJson) ==
          verify::render_report(verify::run_checks("prop2"), verify::Format::kJson));
  }

  TEST_CASE("a looser precision target skips tight checks") {
    num::PrecisionConfig loose;
    loose.target_abs_error = 1e-4L;
    const auto results = verify::run_checks("prop", loose);
    const auto summary = verify::summarize(results);
    CHECK(summary.skipped > 0);
    CHECK(summary.failed == 0);
    for (const auto& r : results) {
      if (r.status == Status::kSkipped) CHECK(r.reason.find("precision target") != std::string::npos);
    }
    CHECK(verify::exit_code(results) == 0);
    const auto json = nlohmann::json::parse(verify::render_report(results, verify::Format::kJson, loose));
    CHECK(json["summary"]["skipped"] == summary.skipped);
  }

  TEST_CASE("exit code reflects failures") {
    verify::CheckResult bad;
    bad.status = Status::kFail;
    verify::CheckResult good;
    good.status = Status::kPass;
    CHECK(verify::exit_code({good}) == 0);
    CHECK(verify::exit_code({good, bad}) != 0);
    CHECK(std::string(verify::to_string(Status::kSkipped)) == "skipped");
  }
}
