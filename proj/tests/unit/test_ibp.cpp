#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "zetalab/calculus.hpp"
#include "zetalab/ibp.hpp"
#include "zetalab/quadrature.hpp"

namespace ibp = zetalab::ibp;
namespace num = zetalab::num;
namespace ex = zetalab::exact;
using ex::BigRational;
using ex::RatPoly;
using num::Complex;
using num::Real;
using zetalab::ErrorKind;
using zetalab::ZetaError;

namespace {

// Product of zeta(-m, a) times zeta^(r)(s, a), integrated directly.
Complex quadrature_value(const std::vector<unsigned>& ms, int r, Complex s) {
  auto f = [&](Real a) {
    Complex v = num::hurwitz_zeta_deriv(r, s, a);
    for (unsigned m : ms) v *= num::hurwitz_zeta(-Real(m), a);
    return v;
  };
  return zetalab::quad::tanh_sinh_01(f, 1e-9L).value;
}

// Integral over [0,1] of prod zeta(-m_i, a), with zeta(-m, a) = -B_{m+1}(a)/(m+1).
Real zeta_product_exact(const std::vector<unsigned>& ms) {
  std::vector<unsigned> idx;
  BigRational scale(1);
  for (unsigned m : ms) {
    idx.push_back(m + 1);
    scale = scale * BigRational(-1, static_cast<long>(m) + 1);
  }
  return (scale * ex::bernoulli_product_integral(idx)).to_real();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("ibp") {
  TEST_CASE("polynomial division and gcd") {
    const RatPoly a{-1, 0, 1};  // s^2 - 1
    const RatPoly b{1, 1};      // s + 1
    const auto [q, rem] = ibp::poly_divmod(a, b);
    CHECK(q == RatPoly{-1, 1});
    CHECK(rem.is_zero());
    const auto [q2, r2] = ibp::poly_divmod(RatPoly{3, 0, 2}, RatPoly{0, 2});
    CHECK(q2 == RatPoly{0, 1});
    CHECK(r2 == RatPoly{3});
    CHECK_THROWS_AS(ibp::poly_divmod(a, RatPoly{}), std::invalid_argument);
    CHECK(ibp::poly_gcd(a, RatPoly{2, 2}) == RatPoly{1, 1});
    CHECK(ibp::poly_gcd(RatPoly{}, RatPoly{}).is_zero());
    CHECK(ibp::poly_gcd(RatPoly{1, 1}, RatPoly{-1, 1}) == RatPoly{1});
  }

  TEST_CASE("rational functions are canonical") {
    const ibp::RationalFunction f(RatPoly{-2, 0, 2}, RatPoly{2, 2});  // (2s^2-2)/(2s+2) = s - 1
    CHECK(f.denominator() == RatPoly{1});
    CHECK(f.numerator() == RatPoly{-1, 1});
    const ibp::RationalFunction g(RatPoly{3}, RatPoly{-2, 4});
    CHECK(g.denominator().leading() == BigRational(1));
    CHECK(g.to_string() == "(3/4)/(-1/2 + s)");
    CHECK(g.shifted_down() == ibp::RationalFunction(RatPoly{3}, RatPoly{-6, 4}));
    CHECK(std::abs(g.eval(1) - Complex(1.5L)) < 1e-18);
    CHECK((f + ibp::RationalFunction(RatPoly{1, -1})).is_zero());
    CHECK_THROWS(ibp::RationalFunction(RatPoly{1}, RatPoly{}));
  }

  TEST_CASE("monomial reductions") {
    // i = 0, r = 0: the zeta integral over [0,1] vanishes.
    CHECK(ibp::reduce_monomial(0, 0).empty());
    CHECK(ibp::reduce_monomial(1, 0).to_string() == "zeta^(0)(s-1) * (-1)/(-1 + s)\n");
    CHECK(ibp::reduce_monomial(2, 0).to_string() ==
          "zeta^(0)(s-1) * (-1)/(-1 + s)\nzeta^(0)(s-2) * (-2)/(2 - 3*s + s^2)\n");
    // r = 1, i = 1 contains zeta' and zeta at s-1.
    const auto& j1 = ibp::reduce_monomial(1, 1);
    CHECK(j1.terms().size() == 2);
    CHECK(j1.terms().count({1, 1}) == 1);
    CHECK(j1.terms().count({0, 1}) == 1);
    CHECK(&ibp::reduce_monomial(3, 1) == &ibp::reduce_monomial(3, 1));
    CHECK_THROWS_AS(ibp::reduce_monomial(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(ibp::reduce_monomial(65, 0), std::invalid_argument);
  }

  TEST_CASE("monomial reductions match quadrature") {
    for (int r = 0; r <= 1; ++r) {
      for (int i : {0, 2, 5}) {
        for (Complex s : {Complex(-0.5L, 0), Complex(0.3L, 1.2L), Complex(-3.2L, 0)}) {
          auto f = [&](Real a) { return std::pow(a, Real(i)) * num::hurwitz_zeta_deriv(r, s, a); };
          const Complex q = zetalab::quad::tanh_sinh_01(f, 1e-11L).value;
          CHECK(std::abs(ibp::eval_combination(ibp::reduce_monomial(i, r), s) - q) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("reduce_poly is linear") {
    const RatPoly p{BigRational(1, 2), -3, 0, 2};
    ibp::LinearCombination want;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      want += ibp::reduce_monomial(static_cast<int>(k), 1).scaled(ibp::RationalFunction::constant(p.coeff(k)));
    }
    CHECK(ibp::reduce_poly(p, 1) == want);
    CHECK(ibp::reduce_poly(RatPoly{}, 0).empty());
  }

  TEST_CASE("symbolic output for the product integrals is stable") {
    const std::vector<unsigned> ms{1, 2};
    const std::string text = ibp::integral_poly_zeta(ms, 1).to_string();
    CHECK(text == read_file(std::string(ZETALAB_GOLDEN_DIR) + "/integrate_ms1_2_r1.txt"));
  }

  TEST_CASE("atom shifts stay within the polynomial degree") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<unsigned> mdist(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<unsigned> ms(1 + trial % 3);
      for (auto& m : ms) m = mdist(rng);
      int n = 0;
      for (unsigned m : ms) n += static_cast<int>(m) + 1;
      CHECK(ibp::zeta_product_poly(ms).degree() == n);
      for (int r = 0; r <= 1; ++r) {
        const auto lc = ibp::integral_poly_zeta(ms, r);
        for (const auto& [atom, coeff] : lc.terms()) {
          CHECK(atom.shift >= 1);
          CHECK(atom.shift <= n);
          CHECK(atom.deriv_order <= r);
          CHECK_FALSE(coeff.is_zero());
        }
      }
    }
  }

  TEST_CASE("random product integrals against quadrature") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> mdist(1, 3);
    std::uniform_real_distribution<double> re(-3.5, 0.8);
    std::uniform_real_distribution<double> im(-1.5, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<unsigned> ms(1 + trial % 2);
      for (auto& m : ms) m = mdist(rng);
      const int r = trial % 2;
      const Complex s(static_cast<Real>(re(rng)), static_cast<Real>(im(rng)));
      CAPTURE(trial);
      const auto lc = ibp::integral_poly_zeta(ms, r);
      CHECK(std::abs(ibp::eval_combination(lc, s) - quadrature_value(ms, r, s)) < 1e-7);
    }
  }

  TEST_CASE("negative integer s reproduces the exact product integrals") {
    for (unsigned m : {1u, 2u, 3u, 5u}) {
      for (const std::vector<unsigned>& ms : {std::vector<unsigned>{1}, std::vector<unsigned>{2, 3}}) {
        std::vector<unsigned> all = ms;
        all.push_back(m);
        const Real want = zeta_product_exact(all);
        const Complex got = ibp::eval_combination(ibp::integral_poly_zeta(ms, 0), -Real(m));
        CHECK(std::abs(got - want) <= 4 * LDBL_EPSILON * std::max<Real>(1, std::fabs(want)) + 1e-18L);
      }
    }
  }

  TEST_CASE("evaluation refuses poles of the coefficients") {
    const auto& lc = ibp::reduce_monomial(3, 0);
    try {
      ibp::eval_combination(lc, 2);
      FAIL("expected a pole error");
    } catch (const ZetaError& e) {
      CHECK(e.kind() == ErrorKind::kPoleProximity);
      CHECK(std::string(e.what()).find("zeta^(0)(s-") != std::string::npos);
    }
    CHECK_NOTHROW(ibp::eval_combination(lc, Complex(2, 1e-6L)));
  }

  TEST_CASE("pair integral") {
    CHECK(std::abs(ibp::pair_integral(0, 0) - Real(1) / 12) < 1e-17);
    CHECK(std::abs(ibp::pair_integral(-1, -1) - Real(1) / 720) < 1e-17);
    // B_2 B_3 has odd total degree, so its integral vanishes.
    CHECK(std::abs(ibp::pair_integral(-1, -2)) < 1e-17);
    CHECK(std::abs(ibp::pair_integral(-2, -2) - zeta_product_exact({2, 2})) < 1e-17);
    CHECK(std::abs(ibp::pair_integral(-3, -1) - zeta_product_exact({3, 1})) < 1e-17);
    for (auto [s1, s2] : {std::pair<Complex, Complex>{-0.3L, -0.7L}, {Complex(0.2L, 0.5L), -1.4L}, {0.3L, 0.4L}}) {
      CHECK(std::abs(ibp::pair_integral(s1, s2) - ibp::pair_integral(s2, s1)) < 1e-16);
      auto f = [&](Real a) { return num::hurwitz_zeta(s1, a) * num::hurwitz_zeta(s2, a); };
      CHECK(std::abs(ibp::pair_integral(s1, s2) - zetalab::quad::tanh_sinh_01(f, 1e-11L).value) < 1e-8);
    }
  }

  TEST_CASE("identities built on the pair integral") {
    // s1 = s2 = -1: 1/720 - (1/12)^2
    CHECK(std::abs(ibp::corollary5_rhs(-1, -1) - (Real(1) / 720 - Real(1) / 144)) < 1e-17);
    CHECK_THROWS_AS(ibp::corollary5_rhs(0.5L, -1), ZetaError);
    CHECK(std::abs(ibp::corollary9(2) + Real(1) / 360) < 1e-17);
    for (Complex s : {Complex(2.5L, 0), Complex(3, 0.5L)}) {
      auto f = [&](Real a) {
        return num::hurwitz_zeta(0, a) * num::hurwitz_zeta(Real(1) - s, a) * num::hurwitz_zeta(Real(2) - s, a);
      };
      CHECK(std::abs(ibp::corollary9(s) - zetalab::quad::tanh_sinh_01(f, 1e-11L).value) < 1e-8);
    }
    CHECK_THROWS_AS(ibp::corollary9(0.5L), ZetaError);
  }
}
