#pragma once

// Exact arithmetic: rationals, dense rational polynomials, Bernoulli numbers
// and polynomials, and exact integration over [0,1].
//
// Convention: B_1 = -1/2, i.e. B_n = B_n(0). This is the convention that makes
// zeta(0, a) = 1/2 - a = -B_1(a).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zetalab::exact {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  explicit BigRational(mpq_class q);

  /// Parses "num/den" or "num". Throws std::invalid_argument on bad input or
  /// a zero denominator.
  static BigRational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  /// "num/den" in decimal, denominator always printed.
  std::string to_string() const;

  /// Nearest long double (correctly rounded up to the last ulp or so).
  long double to_real() const;

  const mpq_class& raw() const { return q_; }

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);  // throws on division by 0

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational binomial(unsigned n, unsigned k);
BigRational factorial(unsigned n);

/// Dense polynomial with rational coefficients, ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRational> coeffs);
  RatPoly(std::initializer_list<BigRational> coeffs);

  static RatPoly constant(const BigRational& c);
  /// c * x^k
  static RatPoly monomial(const BigRational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigRational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  BigRational coeff(std::size_t k) const;
  const BigRational& leading() const { return coeffs_.back(); }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const BigRational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const BigRational& c) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// p(x + c), exact.
  RatPoly shifted(const BigRational& c) const;

  /// Horner evaluation in working precision.
  std::complex<long double> eval(std::complex<long double> x) const;

  /// Ascending-order text in the variable `var`, e.g. "1/6 - s + s^2".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
BigRational poly_eval(const RatPoly& p, const BigRational& x);
/// q(x) = p(1 - x)
RatPoly poly_reflect(const RatPoly& p);
/// Exact integral of p over [0, 1].
BigRational poly_integral_01(const RatPoly& p);

/// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1. Memoized; safe for
/// concurrent callers.
BigRational bernoulli_number(unsigned n);

/// B_n(x) = sum_i C(n,i) B_{n-i} x^i
RatPoly bernoulli_polynomial(unsigned n);

/// Exact integral over [0,1] of prod_i B_{m_i}(x). Every index must be >= 1
/// (std::invalid_argument otherwise); the empty product integrates to 1.
///
/// Evaluates the factors pointwise on N+1 rational nodes and applies the
/// interpolatory (Newton-Cotes) weights of degree N = sum m_i, which is exact
/// for this integrand. No polynomial products are formed.
BigRational bernoulli_product_integral(std::span<const unsigned> indices);

/// zeta(-m, x) = -B_{m+1}(x) / (m+1)
RatPoly zeta_neg_int_poly(unsigned m);

}  // namespace zetalab::exact
