#pragma once

// Integration by parts against zeta^(r)(s, a) on [0, 1]: integrals of
// polynomial * zeta^(r)(s, a) reduce to finite sums of zeta^(j)(s-k) with
// coefficients that are exact rational functions of s. Also the closed-form
// pair integral and the identities built on it.

#include <map>
#include <span>
#include <string>

#include "zetalab/exact.hpp"
#include "zetalab/zeta_num.hpp"

namespace zetalab::ibp {

using exact::BigRational;
using exact::RatPoly;
using num::Complex;
using num::PrecisionConfig;
using num::Real;

/// zeta^(deriv_order)(s - shift)
struct DerivAtom {
  int deriv_order;
  int shift;

  friend auto operator<=>(const DerivAtom&, const DerivAtom&) = default;
};

/// num(s)/den(s), coprime, den monic and nonzero.
class RationalFunction {
 public:
  RationalFunction() : den_(RatPoly::constant(1)) {}
  explicit RationalFunction(RatPoly num, RatPoly den = RatPoly::constant(1));
  static RationalFunction constant(const BigRational& c) { return RationalFunction(RatPoly::constant(c)); }

  const RatPoly& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// f(s - 1)
  RationalFunction shifted_down() const;

  Complex eval(Complex s) const;

  /// "(num)/(den)" with both polynomials ascending in s.
  std::string to_string() const;

 private:
  RatPoly num_;
  RatPoly den_;
};

/// Quotient and remainder over Q. Throws std::invalid_argument on b = 0.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

class LinearCombination {
 public:
  using Terms = std::map<DerivAtom, RationalFunction>;

  void add(DerivAtom atom, const RationalFunction& c);
  LinearCombination& operator+=(const LinearCombination& o);
  /// Every coefficient times c.
  LinearCombination scaled(const RationalFunction& c) const;
  /// s -> s-1 in every coefficient and zeta^(j)(s-k) -> zeta^(j)(s-k-1), i.e.
  /// the same expression read at s-1.
  LinearCombination shifted_down() const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  /// One line per atom, "zeta^(j)(s-k) * (num)/(den)", sorted by (j, k).
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Integral over [0,1] of a^i zeta^(r)(s, a), i <= 64, r in {0, 1}. Memoized.
const LinearCombination& reduce_monomial(int i, int r);

/// Integral over [0,1] of p(a) zeta^(r)(s, a), degree(p) <= 64.
LinearCombination reduce_poly(const RatPoly& p, int r);

/// Integral over [0,1] of prod_i zeta(-m_i, a) * zeta^(r)(s, a). The product
/// is the polynomial prod_i (-B_{m_i+1}(a)/(m_i+1)) of degree
/// N = sum (m_i + 1) <= 64.
LinearCombination integral_poly_zeta(std::span<const unsigned> ms, int r);

/// The polynomial factor used by integral_poly_zeta.
RatPoly zeta_product_poly(std::span<const unsigned> ms);

/// Sum over atoms of zeta^(j)(s-k) * coefficient(s). Throws kPoleProximity if
/// s is within 1e-8 of a root of any coefficient's denominator.
Complex eval_combination(const LinearCombination& lc, Complex s,
                         const PrecisionConfig& cfg = num::default_config());

/// Integral over [0,1] of zeta(s1, a) zeta(s2, a):
///   2 (2pi)^{s1+s2-2} Gamma(1-s1) Gamma(1-s2) cos(pi (s1-s2)/2) zeta(2-s1-s2).
Complex pair_integral(Complex s1, Complex s2, const PrecisionConfig& cfg = num::default_config());

/// pair_integral(s1, s2) - zeta(s1) zeta(s2); Re s1 < 0 and Re s2 < 0.
Complex corollary5_rhs(Complex s1, Complex s2, const PrecisionConfig& cfg = num::default_config());

/// (2 (2pi)^{-2s} Gamma(s)^2 zeta(2s) - zeta(1-s)^2) / (2 (s-1)), Re s > 1.
/// Equals the integral over [0,1] of zeta(0,a) zeta(1-s,a) zeta(2-s,a).
Complex corollary9(Complex s, const PrecisionConfig& cfg = num::default_config());

}  // namespace zetalab::ibp
