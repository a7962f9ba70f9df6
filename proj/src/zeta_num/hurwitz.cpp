#include <cmath>
#include <string>

#include "euler_maclaurin.hpp"

namespace zetalab::num {

using detail::em_head;
using detail::em_remainder;
using detail::plan_em;
using detail::require_alpha;

namespace {

constexpr Real kPoleGuard = 1e-10L;
constexpr int kMaxDeriv = 6;
// Inside this distance from s = 1 the pole is added analytically to the
// regular part; outside it the direct sum is used.
constexpr Real kRegularZone = 0.25L;

void require_off_pole(Complex s, const char* where) {
  if (std::abs(s - Real(1)) <= kPoleGuard) {
    raise(ErrorKind::kPoleProximity, std::string(where) + ": s is within 1e-10 of the pole s = 1");
  }
}

Real factorial(int n) {
  Real f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Complex hurwitz_zeta_regular(Complex s, Real alpha, const PrecisionConfig& cfg) {
  require_alpha(alpha, "hurwitz_zeta");
  checked(s, "hurwitz_zeta: argument");
  const auto plan = plan_em(s, 0, alpha, cfg);
  return checked(em_head(s, alpha, plan.head) + em_remainder(s, alpha, plan), "hurwitz_zeta");
}

Complex hurwitz_zeta(Complex s, Real alpha, const PrecisionConfig& cfg) {
  require_off_pole(s, "hurwitz_zeta");
  if (std::abs(s - Real(1)) < kRegularZone) {
    return checked(hurwitz_zeta_regular(s, alpha, cfg) + Real(1) / (s - Real(1)), "hurwitz_zeta");
  }
  require_alpha(alpha, "hurwitz_zeta");
  checked(s, "hurwitz_zeta: argument");
  return checked(detail::em_direct(s, alpha, plan_em(s, 0, alpha, cfg)), "hurwitz_zeta");
}

Complex riemann_zeta(Complex s, const PrecisionConfig& cfg) { return hurwitz_zeta(s, 1, cfg); }

Complex hurwitz_zeta_deriv(int r, Complex s, Real alpha, const PrecisionConfig& cfg) {
  if (r < 0 || r > kMaxDeriv) {
    raise(ErrorKind::kPrecondition, "hurwitz_zeta_deriv: order must be in [0, 6]");
  }
  if (r == 0) return hurwitz_zeta(s, alpha, cfg);
  require_alpha(alpha, "hurwitz_zeta_deriv");
  require_off_pole(s, "hurwitz_zeta_deriv");
  checked(s, "hurwitz_zeta_deriv: argument");

  const auto coeffs = detail::regular_taylor(s, alpha, r, cfg);
  const Real rf = factorial(r);
  // d^r/ds^r 1/(s-1) = (-1)^r r! / (s-1)^{r+1}
  const Complex pole = (r % 2 == 0 ? rf : -rf) / std::pow(s - Real(1), r + 1);
  return checked(rf * coeffs[static_cast<std::size_t>(r)] + pole, "hurwitz_zeta_deriv");
}

std::vector<Complex> hurwitz_zeta_derivs(int max_order, Complex s, Real alpha,
                                         const PrecisionConfig& cfg) {
  if (max_order < 0 || max_order > kMaxDeriv) {
    raise(ErrorKind::kPrecondition, "hurwitz_zeta_derivs: order must be in [0, 6]");
  }
  require_alpha(alpha, "hurwitz_zeta_derivs");
  require_off_pole(s, "hurwitz_zeta_derivs");
  checked(s, "hurwitz_zeta_derivs: argument");

  const auto coeffs = detail::regular_taylor(s, alpha, max_order, cfg);
  std::vector<Complex> out(coeffs.size());
  const Complex inv = Real(1) / (s - Real(1));
  Complex pole = inv;  // (-1)^r r! / (s-1)^{r+1}
  Real rf = 1;
  for (int r = 0; r <= max_order; ++r) {
    if (r > 0) {
      rf *= r;
      pole *= -Real(r) * inv;
    }
    out[static_cast<std::size_t>(r)] =
        checked(rf * coeffs[static_cast<std::size_t>(r)] + pole, "hurwitz_zeta_derivs");
  }
  // The r = 0 entry is served by the direct sum, not the contour.
  out[0] = hurwitz_zeta(s, alpha, cfg);
  return out;
}

Complex riemann_zeta_deriv(int r, Complex s, const PrecisionConfig& cfg) {
  return hurwitz_zeta_deriv(r, s, 1, cfg);
}

Complex stieltjes(int n, Real alpha, const PrecisionConfig& cfg) {
  if (n < -1 || n > 5) raise(ErrorKind::kPrecondition, "stieltjes: order must be in [-1, 5]");
  require_alpha(alpha, "stieltjes");
  if (n == -1) return 1;
  // zeta(1+t, a) - 1/t is the regular part at s = 1 + t; its Taylor
  // coefficients are gamma_n(a).
  const auto coeffs = detail::regular_taylor(Complex(1, 0), alpha, n, cfg);
  return coeffs[static_cast<std::size_t>(n)];
}

StieltjesValue stieltjes_value(int n, Real alpha, const PrecisionConfig& cfg) {
  return {n, alpha, stieltjes(n, alpha, cfg)};
}

}  // namespace zetalab::num
