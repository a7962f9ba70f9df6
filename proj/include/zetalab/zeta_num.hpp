#pragma once

// Numeric kernels for Gamma, Riemann/Hurwitz zeta and their s-derivatives,
// digamma and generalized Stieltjes constants, in long double working
// precision.
//
// Every operation either returns a finite value or throws ZetaError; NaN and
// infinity never escape.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zetalab/error.hpp"

namespace zetalab::num {

using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;
inline constexpr Real kEulerGamma = 0.577215664901532860606512090082402431L;

/// Accuracy knobs shared by every kernel. Immutable once validated.
struct PrecisionConfig {
  int em_cutoff = 25;        // Euler-Maclaurin head length M
  int em_tail_terms = 12;    // Bernoulli correction terms J
  Real contour_radius = 0.5L;
  int contour_points = 32;   // power of two
  Real target_abs_error = 1e-11L;

  /// Throws ZetaError(kPrecondition) naming the first violated invariant.
  void validate() const;
};

const PrecisionConfig& default_config();

/// Throws kNumericOverflow if either component is not finite.
Complex checked(Complex z, const char* where);

/// "re+imi" / "re-imi" with 15 significant digits.
std::string format_complex(Complex z);
/// Parses "a", "a+bi", "a-bi", "bi" (no spaces). Throws std::invalid_argument.
Complex parse_complex(const std::string& text);

Complex gamma_complex(Complex z, const PrecisionConfig& cfg = default_config());

Complex riemann_zeta(Complex s, const PrecisionConfig& cfg = default_config());

/// zeta(s, a) for real a > 0 by Euler-Maclaurin.
Complex hurwitz_zeta(Complex s, Real alpha, const PrecisionConfig& cfg = default_config());

/// zeta(s, a) - 1/(s-1). Entire in s; evaluated without cancellation near
/// s = 1 (the value at s = 1 is gamma_0(a) = -psi(a)).
Complex hurwitz_zeta_regular(Complex s, Real alpha, const PrecisionConfig& cfg = default_config());

/// d^r/ds^r zeta(s, a), r <= 6.
Complex hurwitz_zeta_deriv(int r, Complex s, Real alpha, const PrecisionConfig& cfg = default_config());

/// All of zeta(s,a), zeta'(s,a), ..., zeta^(max_order)(s,a) from one contour.
std::vector<Complex> hurwitz_zeta_derivs(int max_order, Complex s, Real alpha,
                                         const PrecisionConfig& cfg = default_config());

Complex riemann_zeta_deriv(int r, Complex s, const PrecisionConfig& cfg = default_config());

/// zeta(s, a) from the disc expansion
///   sum_{n<k} (n+a)^-s + sum_{n>=0} (s)_n zeta_k(s+n) (-a)^n / n!,
/// valid for |a| < k; requires |a| < k - 1/4.
Complex hurwitz_taylor(Complex s, Complex alpha, int k, const PrecisionConfig& cfg = default_config());

/// Generalized Stieltjes constant gamma_n(a), -1 <= n <= 5, from
/// zeta(s+1, a) = 1/s + sum_n gamma_n(a) s^n.
Complex stieltjes(int n, Real alpha, const PrecisionConfig& cfg = default_config());

struct StieltjesValue {
  int order;  // >= -1; order -1 carries value 1 exactly
  Real at;
  Complex value;
};

StieltjesValue stieltjes_value(int n, Real alpha, const PrecisionConfig& cfg = default_config());

/// psi(a) for real a > 0 (upward recurrence + asymptotic series).
Complex digamma(Real alpha, const PrecisionConfig& cfg = default_config());

/// Taylor coefficients f^(k)(center)/k!, k = 0..max_order, from the
/// trapezoidal rule on the Cauchy integral over |z - center| = radius with
/// `points` samples.
std::vector<Complex> contour_taylor(const std::function<Complex(Complex)>& f, Complex center,
                                    int max_order, Real radius, int points);

/// f^(order)(center) via contour_taylor with the configured radius/points.
Complex contour_derivative(const std::function<Complex(Complex)>& f, Complex center, int order,
                           const PrecisionConfig& cfg = default_config());

}  // namespace zetalab::num
