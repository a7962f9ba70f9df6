#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "zetalab/zeta_num.hpp"

namespace zetalab::num {

void PrecisionConfig::validate() const {
  auto fail = [](const char* what) { raise(ErrorKind::kPrecondition, what); };
  if (em_cutoff < 8) fail("PrecisionConfig: em_cutoff must be >= 8");
  if (em_tail_terms < 1 || em_tail_terms > 20) fail("PrecisionConfig: em_tail_terms must be in [1, 20]");
  if (!(contour_radius > 0) || !std::isfinite(contour_radius)) {
    fail("PrecisionConfig: contour_radius must be a positive real");
  }
  if (contour_points < 16 || (contour_points & (contour_points - 1)) != 0) {
    fail("PrecisionConfig: contour_points must be a power of two >= 16");
  }
  if (!(target_abs_error >= 1e-13L) || !std::isfinite(target_abs_error)) {
    fail("PrecisionConfig: target_abs_error must be >= 1e-13");
  }
}

const PrecisionConfig& default_config() {
  static const PrecisionConfig cfg{};
  return cfg;
}

Complex checked(Complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorKind::kNumericOverflow, std::string(where) + ": non-finite value");
  }
  return z;
}

namespace {

std::string fmt15(Real x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return buf;
}

Real parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const Real v = std::strtold(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  return v;
}

}  // namespace

std::string format_complex(Complex z) {
  std::string im = fmt15(z.imag());
  if (im.front() != '-') im = "+" + im;
  return fmt15(z.real()) + im + "i";
}

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return {parse_real(text), 0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) -> Real {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

}  // namespace zetalab::num
