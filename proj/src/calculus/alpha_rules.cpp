#include <cmath>
#include <string>

#include "zetalab/calculus.hpp"

namespace zetalab::calc {
namespace {

Real factorial(int n) {
  Real f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Complex alpha_derivative(int r, Complex s, Real alpha, const PrecisionConfig& cfg) {
  if (r < 0 || r > 5) raise(ErrorKind::kPrecondition, "alpha_derivative: order must be in [0, 5]");
  if (std::abs(s) <= 1e-10L) {
    raise(ErrorKind::kPoleProximity,
          "alpha_derivative: s is within 1e-10 of 0, where zeta(s+1, a) has its pole");
  }
  const auto d = num::hurwitz_zeta_derivs(r, s + Real(1), alpha, cfg);
  Complex out = -s * d[static_cast<std::size_t>(r)];
  if (r > 0) out -= Real(r) * d[static_cast<std::size_t>(r - 1)];
  return num::checked(out, "alpha_derivative");
}

Complex alpha_derivative_at_zero(int r, Real alpha, const PrecisionConfig& cfg) {
  if (r < 0 || r > 4) {
    raise(ErrorKind::kPrecondition, "alpha_derivative_at_zero: order must be in [0, 4]");
  }
  return -factorial(r) * num::stieltjes(r - 1, alpha, cfg);
}

Complex stieltjes_alpha_derivative(int r, Real alpha, const PrecisionConfig& cfg) {
  if (r < 1 || r > 6) {
    raise(ErrorKind::kPrecondition, "stieltjes_alpha_derivative: order must be in [1, 6]");
  }
  if (!(alpha > 0)) raise(ErrorKind::kDomain, "stieltjes_alpha_derivative: alpha must be > 0");
  auto f = [&](Complex s) { return s * (s + Real(1)) * num::hurwitz_zeta(s + Real(2), alpha, cfg); };
  // Taylor coefficient k is f^(k)(0)/k!, which is exactly what is needed.
  const auto c = num::contour_taylor(f, 0, r, cfg.contour_radius, cfg.contour_points);
  return -c[static_cast<std::size_t>(r)];
}

Complex psi_chain(int r, Real alpha, const PrecisionConfig& cfg) {
  if (r < 1 || r > 20) raise(ErrorKind::kPrecondition, "psi_chain: order must be in [1, 20]");
  const Real sign = r % 2 == 1 ? 1 : -1;
  return num::checked(sign * factorial(r) * num::hurwitz_zeta(Real(r + 1), alpha, cfg), "psi_chain");
}

}  // namespace zetalab::calc
