#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "zetalab/calculus.hpp"

namespace calc = zetalab::calc;
namespace num = zetalab::num;
using num::Complex;
using num::Real;
using zetalab::ErrorKind;
using zetalab::ZetaError;
using zetalab::exact::BigRational;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ZetaError& e) {
    return e.kind();
  }
  FAIL("expected ZetaError");
  return ErrorKind::kDomain;
}

std::vector<BigRational> coeffs(int r) {
  std::vector<BigRational> out;
  for (const auto& t : calc::antiderivative_terms(r)) out.push_back(t.coefficient);
  return out;
}

Complex central(const std::function<Complex(Real)>& f, Real x, Real h) { return (f(x + h) - f(x - h)) / (2 * h); }

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("primitive family coefficients") {
    CHECK(coeffs(0) == std::vector<BigRational>{1});
    CHECK(coeffs(1) == std::vector<BigRational>{1, 1});
    CHECK(coeffs(2) == std::vector<BigRational>{2, 2, 1});
    CHECK(coeffs(3) == std::vector<BigRational>{6, 6, 3, 1});
    for (int r = 0; r <= 6; ++r) {
      for (const auto& t : calc::antiderivative_terms(r)) {
        CHECK(t.pole_power == r + 1 - t.deriv_order);
        CHECK(t.pole_power >= 1);
      }
    }
    CHECK_THROWS_AS(calc::antiderivative_terms(7), ZetaError);
  }

  TEST_CASE("exact a-derivative of the primitive collapses to zeta^(r)(s, a)") {
    const calc::SymbolicSum want_template;
    for (int r = 0; r <= 6; ++r) {
      CAPTURE(r);
      const calc::SymbolicSum want{{{r, 0}, BigRational(1)}};
      const auto terms = calc::antiderivative_terms(r);
      CHECK(calc::alpha_derivative_symbolic(terms, calc::Argument::kAlpha) == want);
      const auto refl = calc::reflected_antiderivative_terms(r);
      CHECK(calc::alpha_derivative_symbolic(refl, calc::Argument::kReflected) == want);
      // Without the sign flip the reflected family lands on -zeta^(r).
      const calc::SymbolicSum neg{{{r, 0}, BigRational(-1)}};
      CHECK(calc::alpha_derivative_symbolic(terms, calc::Argument::kReflected) == neg);
    }
    // Wrong coefficients leave residue behind.
    auto bad = calc::antiderivative_terms(2);
    bad[0].coefficient = 1;
    CHECK(calc::alpha_derivative_symbolic(bad, calc::Argument::kAlpha).size() == 2);
  }

  TEST_CASE("primitive evaluation") {
    // r = 0 at s = -1: zeta(-2, a)/2 = -B_3(a)/6
    for (Real a : {0.2L, 0.5L, 0.9L}) {
      const Real b3 = oracle::eval_poly(oracle::bernoulli_poly(3), a);
      CHECK(std::abs(calc::antiderivative_eval(0, -1, a) - (-b3 / 6)) < 1e-17);
    }
    auto f = [](Real a) { return calc::antiderivative_eval(0, -0.5L, a); };
    CHECK(std::abs(central(f, 0.6L, 1e-5L) - num::hurwitz_zeta(-0.5L, 0.6L)) < 1e-6);
    // r = 2 at s = 3, a = 1
    const Real z2 = oracle::kPi * oracle::kPi / 6;
    const Complex zpp2 = num::riemann_zeta_deriv(2, 2);
    const Complex want = 2 * z2 / Real(-8) + 2 * oracle::kZetaPrime2 / Real(4) + zpp2 / Real(-2);
    CHECK(std::abs(calc::antiderivative_eval(2, 3, 1) - want) < 1e-16);
    CHECK(kind_of([] { calc::antiderivative_eval(1, 1, 0.5L); }) == ErrorKind::kPoleProximity);
    CHECK(kind_of([] { calc::antiderivative_eval(0, 2, 0.5L); }) == ErrorKind::kPoleProximity);
    CHECK(kind_of([] { calc::antiderivative_eval(5, 0.5L, 0.5L); }) == ErrorKind::kPrecondition);
  }

  TEST_CASE("primitive property on a grid") {
    const Complex svals[] = {{-0.5L, 0}, {-2.3L, 0}, {0.4L, 1}, {-1.1L, -0.6L}};
    const Real avals[] = {0.3L, 0.8L, 1.7L};
    for (int r = 0; r <= 3; ++r) {
      for (Complex s : svals) {
        for (Real a : avals) {
          auto f = [&](Real x) { return calc::antiderivative_eval(r, s, x); };
          CHECK(std::abs(central(f, a, 1e-5L) - num::hurwitz_zeta_deriv(r, s, a)) < 1e-6);
        }
      }
    }
  }

  TEST_CASE("a-derivative rule") {
    CHECK(std::abs(calc::alpha_derivative(0, -1, 0.5L)) < 1e-18);
    struct P {
      int r;
      Complex s;
      Real a;
    };
    for (const P& p : {P{1, -0.5L, 0.7L}, P{2, 2, 1}, P{0, {0.3L, 1}, 0.4L}, P{3, -1.5L, 1.2L}}) {
      auto f = [&](Real x) { return num::hurwitz_zeta_deriv(p.r, p.s, x); };
      CHECK(std::abs(calc::alpha_derivative(p.r, p.s, p.a) - central(f, p.a, 1e-4L)) < 1e-6);
    }
    CHECK(kind_of([] { calc::alpha_derivative(1, 1e-12L, 0.5L); }) == ErrorKind::kPoleProximity);
  }

  TEST_CASE("s -> 0 rule and Stieltjes chain") {
    CHECK(calc::alpha_derivative_at_zero(0, 0.3L) == Complex(-1));
    CHECK(std::abs(calc::alpha_derivative_at_zero(1, 1) + oracle::euler_gamma()) < 1e-17);
    CHECK(std::abs(calc::alpha_derivative_at_zero(2, 1) - 2 * oracle::kStieltjes1) < 1e-15);
    for (int r = 0; r <= 3; ++r) {
      auto f = [&](Real x) { return num::hurwitz_zeta_deriv(r, 0, x); };
      CHECK(std::abs(calc::alpha_derivative_at_zero(r, 0.9L) - central(f, 0.9L, 1e-4L)) < 1e-6);
    }
    // d/da gamma_{r-1} by Leibniz: -(r zeta^(r-1)(2,a) + r(r-1) zeta^(r-2)(2,a)) / r!
    for (Real a : {0.4L, 1.0L, 2.2L}) {
      const auto d = num::hurwitz_zeta_derivs(3, 2, a);
      CHECK(std::abs(calc::stieltjes_alpha_derivative(1, a) + d[0]) < 1e-15);
      CHECK(std::abs(calc::stieltjes_alpha_derivative(2, a) + (d[1] + d[0])) < 1e-15);
      CHECK(std::abs(calc::stieltjes_alpha_derivative(3, a) + (d[2] / Real(2) + d[1])) < 1e-15);
    }
    CHECK(std::abs(calc::stieltjes_alpha_derivative(1, 1) + oracle::kPi * oracle::kPi / 6) < 1e-16);
    auto g0 = [](Real x) { return num::stieltjes(0, x); };
    CHECK(std::abs(calc::stieltjes_alpha_derivative(1, 0.8L) - central(g0, 0.8L, 1e-4L)) < 1e-6);
  }

  TEST_CASE("digamma chain") {
    CHECK(std::abs(calc::psi_chain(1, 1) - oracle::kPi * oracle::kPi / 6) < 1e-17);
    CHECK(std::abs(calc::psi_chain(2, 1) - Real(-2.404113806319188570799476L)) < 1e-17);
    auto psi = [](Real x) { return num::digamma(x); };
    CHECK(std::abs(calc::psi_chain(1, 0.5L) - central(psi, 0.5L, 1e-4L)) < 1e-6);
    for (Real a : {0.5L, 1.0L, 1.5L}) {
      auto zp = [](Real x) { return num::hurwitz_zeta_deriv(1, 0, x); };
      CHECK(std::abs(central(zp, a, 1e-4L) - num::digamma(a)) < 1e-7);
      const Real h = 2e-4L;
      const Complex second = (zp(a + h) - Real(2) * zp(a) + zp(a - h)) / (h * h);
      CHECK(std::abs(second - num::hurwitz_zeta(2, a)) < 1e-5);
    }
  }

  TEST_CASE("integrals over [0, 1] and [1, inf)") {
    // Polynomial case: integral of B_2 over [0,1] is 0 exactly.
    CHECK(zetalab::exact::poly_integral_01(zetalab::exact::zeta_neg_int_poly(1)).is_zero());
    CHECK(std::abs(calc::integral_01(0, -1)) < 1e-17);
    for (int r = 0; r <= 4; ++r) {
      for (Complex s : {Complex(-0.5L, 0), Complex(-2.5L, 0), Complex(0.7L, 2), Complex(-6.1L, 0.3L)}) {
        CHECK(std::abs(calc::integral_01(r, s)) < 1e-9);
      }
    }
    CHECK(kind_of([] { calc::integral_01(0, 1.5L); }) == ErrorKind::kPrecondition);

    const Real z2 = oracle::kPi * oracle::kPi / 6;
    CHECK(std::abs(calc::integral_1_inf(0, 3) - z2 / 2) < 1e-18);
    CHECK(std::abs(calc::integral_1_inf(0, 4) - num::riemann_zeta(3) / Real(3)) < 1e-18);
    CHECK(std::abs(calc::integral_1_inf(1, 3) - (-z2 / 4 + oracle::kZetaPrime2 / 2)) < 1e-17);
    CHECK(kind_of([] { calc::integral_1_inf(0, 2); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] { calc::integral_1_inf(4, 3); }) == ErrorKind::kPrecondition);
  }
}
