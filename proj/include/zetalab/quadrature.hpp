#pragma once

// Cross-check integrators. Nothing in the identity machinery depends on these;
// they exist to test it.

#include <functional>
#include <vector>

#include "zetalab/zeta_num.hpp"

namespace zetalab::quad {

using num::Complex;
using num::Real;

struct QuadResult {
  Complex value;
  Real error_estimate = 0;  // |difference of the last two refinement levels|
  int evaluations = 0;
};

using Integrand = std::function<Complex(Real)>;

inline constexpr int kDefaultBudget = 1 << 16;

/// Double-exponential (tanh-sinh) rule on (0, 1). Tolerates algebraic endpoint
/// singularities x^-sigma with sigma < 1; nodes reach down to ~1e-2000 from
/// either end, so the integrand must stay finite there (long double range).
///
/// Halves the step until two successive levels differ by less than `tol`.
/// Throws ZetaError(kConvergence) if the budget runs out first and
/// ZetaError(kNumericOverflow) on a non-finite sample.
QuadResult tanh_sinh_01(const Integrand& f, Real tol, int max_evaluations = kDefaultBudget);

struct TanhSinhNode {
  Real x;           // abscissa in (0, 1)
  Real complement;  // 1 - x, computed without cancellation
  Real weight;
};

/// Full node set of the tanh-sinh rule with step 2^-level.
std::vector<TanhSinhNode> tanh_sinh_nodes(int level);

/// Adaptive bisection on [1, A] with 10-point Gauss-Legendre panels.
QuadResult integrate_1_to_A(const Integrand& f, Real upper, Real tol,
                            int max_evaluations = kDefaultBudget);

}  // namespace zetalab::quad
