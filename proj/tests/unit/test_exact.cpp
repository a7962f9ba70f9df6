#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "zetalab/exact.hpp"

using zetalab::exact::BigRational;
using zetalab::exact::RatPoly;
namespace ex = zetalab::exact;

namespace {

BigRational from_mpq(const mpq_class& q) { return BigRational(q); }

// Calls f on every non-decreasing index tuple with entries >= 1 and sum <= max_sum.
void for_each_multiset(unsigned max_sum, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned lo, unsigned left) {
    if (!cur.empty()) f(cur);
    for (unsigned m = lo; m <= left; ++m) {
      cur.push_back(m);
      rec(m, left - m);
      cur.pop_back();
    }
  };
  rec(1, max_sum);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("BigRational canonical form and text") {
    CHECK(BigRational(6, -4).to_string() == "-3/2");
    CHECK(BigRational(0, 5).to_string() == "0/1");
    CHECK(BigRational(7).to_string() == "7/1");
    CHECK(BigRational::parse("10/-4") == BigRational(-5, 2));
    CHECK(BigRational::parse("-3") == BigRational(-3));
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  }

  TEST_CASE("BigRational arithmetic and conversion") {
    const BigRational a(1, 3), b(1, 6);
    CHECK(a + b == BigRational(1, 2));
    CHECK(a - b == BigRational(1, 6));
    CHECK(a * b == BigRational(1, 18));
    CHECK(a / b == BigRational(2));
    CHECK(-a == BigRational(-1, 3));
    CHECK(b < a);
    CHECK(BigRational(1, 3).to_real() == doctest::Approx(0.3333333333333333).epsilon(1e-16));
    // Round trip through text for a big value.
    const BigRational big = ex::factorial(30) / ex::factorial(17);
    CHECK(BigRational::parse(big.to_string()) == big);
    CHECK(ex::binomial(10, 3) == BigRational(120));
    CHECK(ex::binomial(3, 5).is_zero());
  }

  TEST_CASE("RatPoly basic algebra") {
    const RatPoly p{BigRational(1), BigRational(2)};  // 1 + 2x
    const RatPoly q{BigRational(-1), BigRational(0), BigRational(1)};  // x^2 - 1
    CHECK((p * q) == RatPoly{BigRational(-1), BigRational(-2), BigRational(1), BigRational(2)});
    CHECK((q - q).is_zero());
    CHECK((q - q).degree() == -1);
    CHECK((p + q).degree() == 2);
    CHECK(q.shifted(BigRational(1)) == RatPoly{BigRational(0), BigRational(2), BigRational(1)});
    CHECK(ex::poly_reflect(p) == RatPoly{BigRational(3), BigRational(-2)});
    CHECK(ex::poly_eval(q, BigRational(3)) == BigRational(8));
    CHECK(ex::poly_integral_01(q) == BigRational(-2, 3));
    CHECK(RatPoly::monomial(BigRational(3), 2).coeff(2) == BigRational(3));
    CHECK(RatPoly{BigRational(1, 6), BigRational(-1), BigRational(1)}.to_string("s") == "1/6 - s + s^2");
    CHECK(RatPoly{}.to_string() == "0");
  }

  TEST_CASE("Bernoulli numbers agree with the Akiyama-Tanigawa oracle up to n = 60") {
    const auto ref = oracle::bernoulli_numbers(60);
    for (unsigned n = 0; n <= 60; ++n) {
      CAPTURE(n);
      CHECK(ex::bernoulli_number(n) == from_mpq(ref[n]));
    }
    CHECK(ex::bernoulli_number(1) == BigRational(-1, 2));
    CHECK(ex::bernoulli_number(12) == BigRational(-691, 2730));
  }

  TEST_CASE("Bernoulli cache under concurrent readers") {
    std::vector<std::thread> pool;
    std::vector<BigRational> got(8);
    for (int t = 0; t < 8; ++t) {
      pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = ex::bernoulli_number(80 + 2 * static_cast<unsigned>(t)); });
    }
    for (auto& th : pool) th.join();
    const auto ref = oracle::bernoulli_numbers(94);
    for (int t = 0; t < 8; ++t) CHECK(got[static_cast<std::size_t>(t)] == from_mpq(ref[80 + 2 * static_cast<unsigned>(t)]));
  }

  TEST_CASE("Bernoulli polynomials") {
    CHECK(ex::bernoulli_polynomial(2) == RatPoly{BigRational(1, 6), BigRational(-1), BigRational(1)});
    for (unsigned n = 0; n <= 20; ++n) {
      CAPTURE(n);
      const RatPoly p = ex::bernoulli_polynomial(n);
      std::vector<BigRational> c;
      for (const auto& q : oracle::bernoulli_poly(n)) c.push_back(from_mpq(q));
      CHECK(p == RatPoly(c));
      // B_n(1-x) = (-1)^n B_n(x)
      CHECK(ex::poly_reflect(p) == (n % 2 == 0 ? p : -p));
      // B_n(x+1) - B_n(x) = n x^(n-1)
      if (n >= 1) CHECK(p.shifted(BigRational(1)) - p == RatPoly::monomial(BigRational(static_cast<long>(n)), n - 1));
    }
  }

  TEST_CASE("zeta(-m, x) polynomial") {
    CHECK(ex::zeta_neg_int_poly(0) == RatPoly{BigRational(1, 2), BigRational(-1)});
    CHECK(ex::poly_eval(ex::zeta_neg_int_poly(1), BigRational(1)) == BigRational(-1, 12));
    CHECK(ex::poly_eval(ex::zeta_neg_int_poly(3), BigRational(1)) == BigRational(1, 120));
    CHECK(ex::poly_eval(ex::zeta_neg_int_poly(2), BigRational(1)).is_zero());
  }

  TEST_CASE("Bernoulli product integrals: closed values") {
    const unsigned b11[] = {1, 1};
    const unsigned b22[] = {2, 2};
    const unsigned b1[] = {1};
    CHECK(ex::bernoulli_product_integral(b11) == BigRational(1, 12));
    CHECK(ex::bernoulli_product_integral(b22) == BigRational(1, 180));
    CHECK(ex::bernoulli_product_integral(b1).is_zero());
    CHECK(ex::bernoulli_product_integral(std::span<const unsigned>{}) == BigRational(1));
    const unsigned bad[] = {2, 0};
    CHECK_THROWS_AS(ex::bernoulli_product_integral(bad), std::invalid_argument);
  }

  TEST_CASE("Bernoulli product integrals vs two independent expansions, sum <= 12") {
    int count = 0;
    for_each_multiset(12, [&](const std::vector<unsigned>& idx) {
      ++count;
      CAPTURE(idx.size());
      const BigRational nc = ex::bernoulli_product_integral(idx);
      RatPoly fold = RatPoly::constant(1);
      for (unsigned m : idx) fold = ex::poly_mul(fold, ex::bernoulli_polynomial(m));
      CHECK(nc == ex::poly_integral_01(fold));
      CHECK(nc == from_mpq(oracle::product_integral(idx)));
      unsigned n = 0;
      for (unsigned m : idx) n += m;
      if (n % 2 == 1) CHECK(nc.is_zero());
    });
    CHECK(count == 271);  // sum of p(n) for n = 1..12
  }
}
