#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "zetalab/verify.hpp"

namespace zetalab::verify {
namespace {

// Rounded to 15 significant digits so the JSON does not depend on the last
// bits of a long double.
double round15(num::Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return std::strtod(buf, nullptr);
}

std::string value_text(const Value& v) {
  if (const auto* z = std::get_if<num::Complex>(&v)) return num::format_complex(*z);
  return std::get<exact::BigRational>(v).to_string();
}

std::string sci(num::Real x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2Le", x);
  return buf;
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::size_t width = 2;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::string out;
  auto row = [&](const std::string& id, const std::string& status, const std::string& err,
                 const std::string& tol, const std::string& note) {
    std::string line = id;
    line.resize(width + 2, ' ');
    std::string st = status;
    st.resize(9, ' ');
    std::string e = err;
    e.resize(11, ' ');
    std::string t = tol;
    t.resize(11, ' ');
    line += st + e + t + note;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  row("id", "status", "abs_error", "tolerance", "note");
  for (const auto& r : results) {
    std::string note = r.status == Status::kSkipped ? r.reason : r.description;
    row(r.id, to_string(r.status), sci(r.abs_error), sci(r.tolerance), note);
  }
  const Summary s = summarize(results);
  out += std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed";
  if (s.skipped > 0) out += ", " + std::to_string(s.skipped) + " skipped";
  out += "\n";
  return out;
}

std::string render_json(const std::vector<CheckResult>& results, const num::PrecisionConfig& cfg) {
  using nlohmann::json;
  json doc;
  doc["config"] = {{"contour_points", cfg.contour_points},
                   {"contour_radius", round15(cfg.contour_radius)},
                   {"em_cutoff", cfg.em_cutoff},
                   {"em_tail_terms", cfg.em_tail_terms},
                   {"target_abs_error", round15(cfg.target_abs_error)}};
  const Summary s = summarize(results);
  doc["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
  std::vector<const CheckResult*> sorted;
  for (const auto& r : results) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });
  json checks = json::array();
  for (const auto* r : sorted) {
    std::string status = to_string(r->status);
    if (r->status == Status::kSkipped) status += "(" + r->reason + ")";
    checks.push_back({{"id", r->id},
                      {"description", r->description},
                      {"paper_anchor", r->paper_anchor},
                      {"lhs", value_text(r->lhs)},
                      {"rhs", value_text(r->rhs)},
                      {"abs_error", round15(r->abs_error)},
                      {"tolerance", round15(r->tolerance)},
                      {"status", status}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_report(const std::vector<CheckResult>& results, Format format, const num::PrecisionConfig& cfg) {
  return format == Format::kJson ? render_json(results, cfg) : render_text(results);
}

}  // namespace zetalab::verify
