#include <cmath>
#include <string>

#include "euler_maclaurin.hpp"

namespace zetalab::num {
namespace {

constexpr Real kHalfLog2Pi = 0.918938533204672741780329736405617640L;

// sin(pi z) with the real part reduced first, so integers stay exact zeros.
Complex sin_pi(Complex z) {
  const Real x = z.real();
  const Real y = z.imag();
  const Real n = std::nearbyint(x);
  const Real f = x - n;  // |f| <= 1/2
  const Real sign = std::fmod(std::fabs(n), 2) == 0 ? 1 : -1;
  const Real s = sign * std::sin(kPi * f);
  const Real c = sign * std::cos(kPi * f);
  return {s * std::cosh(kPi * y), c * std::sinh(kPi * y)};
}

// Stirling series for log Gamma(w), |w| large and Re w > 0.
Complex log_gamma_stirling(Complex w) {
  Complex sum = (w - Real(0.5)) * std::log(w) - w + kHalfLog2Pi;
  const Complex inv = Real(1) / w;
  const Complex inv2 = inv * inv;
  Complex p = inv;
  for (int j = 1; j <= 15; ++j) {
    // B_2j / (2j (2j-1)) = (2j)! ratio / (2j (2j-1))
    Real b = detail::bernoulli_ratio(j);
    for (int i = 1; i <= 2 * j - 2; ++i) b *= i;  // B_2j/(2j)! * (2j-2)!
    sum += b * p;
    p *= inv2;
  }
  return sum;
}

Complex gamma_right(Complex z) {
  // Shift up until Stirling is accurate, divide the shift back out.
  Complex w = z;
  Complex prod = 1;
  while (w.real() < 20 || std::abs(w) < 20) {
    prod *= w;
    w += Real(1);
  }
  return std::exp(log_gamma_stirling(w)) / prod;
}

}  // namespace

Complex gamma_complex(Complex z, const PrecisionConfig&) {
  checked(z, "gamma: argument");
  if (z.real() <= 0.5L) {
    const Real n = std::nearbyint(z.real());
    if (n <= 0 && std::abs(z - n) < 1e-12L) {
      raise(ErrorKind::kPoleProximity, "gamma: argument within 1e-12 of a non-positive integer");
    }
  }
  if (z.real() < 0.5L) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return checked(kPi / (sin_pi(z) * gamma_right(Real(1) - z)), "gamma");
  }
  return checked(gamma_right(z), "gamma");
}

Complex digamma(Real alpha, const PrecisionConfig&) {
  detail::require_alpha(alpha, "digamma");
  Real x = alpha;
  Real acc = 0;
  while (x < 10) {
    acc -= 1 / x;
    x += 1;
  }
  // psi(x) ~ log x - 1/(2x) - sum_j B_2j / (2j x^2j)
  const Real inv2 = 1 / (x * x);
  Real p = inv2;
  Real series = std::log(x) - 1 / (2 * x);
  for (int j = 1; j <= 12; ++j) {
    Real b = detail::bernoulli_ratio(j);
    for (int i = 1; i <= 2 * j - 1; ++i) b *= i;  // B_2j/(2j)! * (2j-1)! = B_2j/(2j)
    series -= b * p;
    p *= inv2;
  }
  return checked(Complex(acc + series, 0), "digamma");
}

}  // namespace zetalab::num
