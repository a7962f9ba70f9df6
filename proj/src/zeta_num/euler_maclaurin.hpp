#pragma once

// Internal Euler-Maclaurin pieces shared by the zeta kernels.
//
//   zeta(s,a) = sum_{n<M} (n+a)^-s                      head
//             + (M+a)^{1-s}/(s-1)                        tail
//             + (M+a)^-s / 2
//             + sum_{j=1}^{J} B_2j/(2j)! (s)_{2j-1} (M+a)^{-s-2j+1}
//
// The "remainder" is everything but the head, with the pole 1/(s-1) taken
// out: ((M+a)^{1-s} - 1)/(s-1) is evaluated as expm1((1-s) log(M+a))/(s-1).

#include "zetalab/zeta_num.hpp"

namespace zetalab::num::detail {

struct EmPlan {
  int head;
  int terms;
};

/// Head length and correction count for a disc of `radius` around `center`.
/// The configured (M, J) are used unless the disc reaches Re s < -1, where
/// head/tail cancellation grows like (M+a)^{1-Re s}; then (M, J) are picked
/// from [1, em_cutoff] x [em_tail_terms, 20] to minimize the estimated
/// truncation plus rounding error.
EmPlan plan_em(Complex center, Real radius, Real alpha, const PrecisionConfig& cfg);

/// B_{2j}/(2j)! for j = 0..21, in working precision.
Real bernoulli_ratio(int j);

Complex em_head(Complex s, Real alpha, int head);
Complex em_remainder(Complex s, Real alpha, EmPlan plan);
/// The full sum, pole included. Keeps relative accuracy when zeta(s,a) is
/// tiny (large Re s), which head + remainder + 1/(s-1) cannot.
Complex em_direct(Complex s, Real alpha, EmPlan plan);

/// expm1 for complex argument, accurate near 0.
Complex expm1c(Complex w);

/// Taylor coefficients of zeta(s,a) - 1/(s-1) about `center`, orders 0..n.
/// Head terms are expanded in closed form; the remainder goes through
/// contour_taylor.
std::vector<Complex> regular_taylor(Complex center, Real alpha, int n, const PrecisionConfig& cfg);

void require_alpha(Real alpha, const char* where);

}  // namespace zetalab::num::detail
