#pragma once

// Calculus in the second argument: primitives of zeta^(r)(s, a) in a, the
// a-derivative rule, Stieltjes/digamma chains and the definite integrals over
// [0, 1] and [1, inf) that follow from them.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "zetalab/exact.hpp"
#include "zetalab/zeta_num.hpp"

namespace zetalab::calc {

using exact::BigRational;
using num::Complex;
using num::PrecisionConfig;
using num::Real;

/// coefficient * zeta^(deriv_order)(s-1, a) / (1-s)^pole_power
struct AntiderivativeTerm {
  int deriv_order;
  BigRational coefficient;
  int pole_power;

  friend bool operator==(const AntiderivativeTerm&, const AntiderivativeTerm&) = default;
};

/// Primitive in a of zeta^(r)(s, a): terms l = 0..r with c_l = r!/l! and
/// pole power r+1-l. r <= 6.
std::vector<AntiderivativeTerm> antiderivative_terms(int r);

/// Primitive in a of zeta^(r)(s, 1-a): the same family with every coefficient
/// negated, evaluated at 1-a.
std::vector<AntiderivativeTerm> reflected_antiderivative_terms(int r);

enum class Argument { kAlpha, kReflected };

/// Key (j, q) stands for zeta^(j)(s, .) / (1-s)^q.
using SymbolicSum = std::map<std::pair<int, int>, BigRational>;

/// Exact d/da of a sum of antiderivative terms, using
///   d/da zeta^(l)(s-1, a) = -l zeta^(l-1)(s, a) + (1-s) zeta^(l)(s, a).
/// For Argument::kReflected the terms are read at 1-a and the chain-rule
/// factor -1 is applied. Zero coefficients are dropped.
SymbolicSum alpha_derivative_symbolic(std::span<const AntiderivativeTerm> terms, Argument arg);

/// Sum_l c_l zeta^(l)(s-1, a) / (1-s)^(r+1-l). r <= 4; s must avoid 1 (and 2,
/// where zeta(s-1, .) has its pole).
Complex antiderivative_eval(int r, Complex s, Real alpha, const PrecisionConfig& cfg = num::default_config());

/// d/da zeta^(r)(s, a) = -r zeta^(r-1)(s+1, a) - s zeta^(r)(s+1, a).
/// Refuses |s| <= 1e-10 with kPoleProximity; use alpha_derivative_at_zero.
Complex alpha_derivative(int r, Complex s, Real alpha, const PrecisionConfig& cfg = num::default_config());

/// d/da zeta^(r)(0, a) = -r! gamma_{r-1}(a), r <= 4.
Complex alpha_derivative_at_zero(int r, Real alpha, const PrecisionConfig& cfg = num::default_config());

/// d/da gamma_{r-1}(a) = -(1/r!) d^r/ds^r [s (s+1) zeta(s+2, a)] at s = 0.
Complex stieltjes_alpha_derivative(int r, Real alpha, const PrecisionConfig& cfg = num::default_config());

/// d^r/da^r psi(a) = (-1)^(r-1) r! zeta(r+1, a), r >= 1.
Complex psi_chain(int r, Real alpha, const PrecisionConfig& cfg = num::default_config());

/// F(1) - F(0+) for the primitive F of zeta^(r)(s, .), Re s < 1, r <= 4. The
/// two endpoints go through different kernel calls (zeta(s-1, 1) directly and
/// 1 + zeta(s-1, 2) for the limit at 0), so a small result certifies that the
/// integral over [0, 1] vanishes.
Complex integral_01(int r, Complex s, const PrecisionConfig& cfg = num::default_config());

/// Integral of zeta^(r)(s, a) over [1, inf) in closed form, Re s > 2, r <= 3.
Complex integral_1_inf(int r, Complex s, const PrecisionConfig& cfg = num::default_config());

}  // namespace zetalab::calc
