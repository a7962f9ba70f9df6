#include <cmath>
#include <numeric>

#include "checks.hpp"
#include "zetalab/calculus.hpp"
#include "zetalab/ibp.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab::verify::detail {
namespace {

using exact::BigRational;
using exact::RatPoly;
using num::Complex;
using num::PrecisionConfig;
using num::Real;

constexpr Real kQuadTol = 1e-11L;

std::string join(std::span<const unsigned> v) {
  std::string out;
  for (unsigned m : v) out += (out.empty() ? "" : ",") + std::to_string(m);
  return out;
}

std::string tag_of(std::span<const unsigned> v) {
  std::string out;
  for (unsigned m : v) out += std::to_string(m);
  return out;
}

// Collapse of the symbolic a-derivative of a primitive family onto
// zeta^(r)(s, .): counts the terms that differ from {(r, 0): 1}.
BigRational residual_terms(const calc::SymbolicSum& sum, int r) {
  long bad = 0;
  for (const auto& [key, c] : sum) {
    if (key != std::pair{r, 0} || !(c == BigRational(1))) ++bad;
  }
  if (!sum.contains({r, 0})) ++bad;
  return BigRational(bad);
}

void add_cor1(Entries& out) {
  for (int r = 0; r <= 6; ++r) {
    out.push_back({{"cor1.symbolic.r" + std::to_string(r),
                    "exact d/da of the primitive family leaves only zeta^(r)(s,a) (terms left over)",
                    "primitive sum_l r!/l! zeta^(l)(s-1,a)/(1-s)^(r+1-l)", {{"r", std::to_string(r)}}, 0, true},
                   [r](const PrecisionConfig&) {
                     const auto terms = calc::antiderivative_terms(r);
                     return rational(residual_terms(calc::alpha_derivative_symbolic(terms, calc::Argument::kAlpha), r), 0);
                   }});
  }
  for (int r = 0; r <= 1; ++r) {
    out.push_back({{"cor1.reflected.r" + std::to_string(r),
                    "exact d/da of the reflected primitive leaves only zeta^(r)(s,1-a) (terms left over)",
                    "primitive of zeta^(r)(s,1-a)", {{"r", std::to_string(r)}}, 0, true},
                   [r](const PrecisionConfig&) {
                     const auto terms = calc::reflected_antiderivative_terms(r);
                     return rational(residual_terms(calc::alpha_derivative_symbolic(terms, calc::Argument::kReflected), r), 0);
                   }});
  }
  for (int r = 0; r <= 3; ++r) {
    out.push_back({{"cor1.fd.r" + std::to_string(r), "central difference of the primitive reproduces zeta^(r)(s,a)",
                    "primitive sum_l r!/l! zeta^(l)(s-1,a)/(1-s)^(r+1-l)",
                    {{"r", std::to_string(r)}, {"s", "-0.5"}, {"a", "0.6"}, {"h", "1e-05"}}, 1e-6L},
                   [r](const PrecisionConfig& c) {
                     auto f = [&](Real a) { return calc::antiderivative_eval(r, -0.5L, a, c); };
                     return numeric(central_diff(f, 0.6L, 1e-5L), num::hurwitz_zeta_deriv(r, -0.5L, 0.6L, c));
                   }});
  }
}

void add_cor2(Entries& out) {
  for (Real a : {0.5L, 1.0L, 1.5L}) {
    out.push_back({{"cor2.psi.a" + fmt(a), "d/da zeta'(0,a) = psi(a)", "d/da zeta'(0,a) = psi(a)",
                    {{"a", fmt(a)}, {"h", "0.0001"}}, 1e-7L},
                   [a](const PrecisionConfig& c) {
                     auto f = [&](Real x) { return num::hurwitz_zeta_deriv(1, 0, x, c); };
                     return numeric(central_diff(f, a, 1e-4L), num::digamma(a, c));
                   }});
    out.push_back({{"cor2.zeta2.a" + fmt(a), "second a-difference of zeta'(0,a) = zeta(2,a)",
                    "d^2/da^2 zeta'(0,a) = zeta(2,a)", {{"a", fmt(a)}, {"h", "0.0002"}}, 1e-5L},
                   [a](const PrecisionConfig& c) {
                     const Real h = 2e-4L;
                     auto f = [&](Real x) { return num::hurwitz_zeta_deriv(1, 0, x, c); };
                     return numeric((f(a + h) - Real(2) * f(a) + f(a - h)) / (h * h), num::hurwitz_zeta(2, a, c));
                   }});
  }
}

void add_cor3(Entries& out) {
  const std::pair<const char*, Complex> svals[] = {{"s3", 3}, {"s4", 4}, {"s3.5+0.5i", Complex(3.5L, 0.5L)}};
  for (int r = 0; r <= 1; ++r) {
    for (const auto& [tag, s] : svals) {
      out.push_back({{"cor3.quad.r" + std::to_string(r) + "." + tag,
                      "closed form vs quadrature on [1, 50] plus the primitive's tail",
                      "integral over [1,inf) of zeta^(r)(s,a) = -sum_l c_l zeta^(l)(s-1)/(1-s)^(r+1-l)",
                      {{"r", std::to_string(r)}, {"s", fmt(s)}, {"A", "50"}}, 1e-6L},
                     [r, s](const PrecisionConfig& c) {
                       const Real upper = 50;
                       auto f = [&](Real a) { return num::hurwitz_zeta_deriv(r, s, a, c); };
                       const auto q = quad::integrate_1_to_A(f, upper, kQuadTol);
                       // The primitive vanishes at infinity, so the tail is -F(A).
                       const Complex tail = -calc::antiderivative_eval(r, s, upper, c);
                       return numeric(calc::integral_1_inf(r, s, c), q.value + tail);
                     }});
    }
  }
  out.push_back({{"cor3.closed.r0.s3", "integral over [1,inf) of zeta(3,a) = pi^2/12",
                  "integral over [1,inf) of zeta^(r)(s,a) = -sum_l c_l zeta^(l)(s-1)/(1-s)^(r+1-l)",
                  {{"r", "0"}, {"s", "3"}}, 1e-10L},
                 [](const PrecisionConfig& c) {
                   return numeric(calc::integral_1_inf(0, 3, c), num::kPi * num::kPi / 12);
                 }});
}

void add_cor4(Entries& out) {
  const std::pair<const char*, Complex> svals[] = {
      {"s-1", -1}, {"s-0.5", -0.5L}, {"s-2.5", -2.5L}, {"s0.3", 0.3L}, {"s0.5+1i", Complex(0.5L, 1)}};
  for (int r = 0; r <= 2; ++r) {
    for (const auto& [tag, s] : svals) {
      out.push_back({{"cor4.endpoint.r" + std::to_string(r) + "." + tag,
                      "primitive at a = 1 minus its limit at a = 0+", "integral over [0,1] of zeta^(r)(s,a) = 0",
                      {{"r", std::to_string(r)}, {"s", fmt(s)}}, 1e-9L},
                     [r, s](const PrecisionConfig& c) { return numeric(calc::integral_01(r, s, c), 0); }});
    }
    for (const auto& [tag, s] : {svals[1], svals[4]}) {
      out.push_back({{"cor4.quad.r" + std::to_string(r) + "." + tag, "tanh-sinh quadrature over (0, 1)",
                      "integral over [0,1] of zeta^(r)(s,a) = 0", {{"r", std::to_string(r)}, {"s", fmt(s)}}, 1e-7L},
                     [r, s](const PrecisionConfig& c) {
                       auto f = [&](Real a) { return num::hurwitz_zeta_deriv(r, s, a, c); };
                       return numeric(quad::tanh_sinh_01(f, kQuadTol).value, 0);
                     }});
    }
  }
}

// (s-1) * integral of G(a) zeta(s,a) with G = zeta(s1,.) zeta(s2,.), written
// as -G(0) + (s-1) * integral of [(G - G(0)) a^-s + G zeta(s, a+1)] so the
// a^-s endpoint singularity is integrated exactly.
Complex cor5_lhs(Complex s1, Complex s2, Real s, const PrecisionConfig& c) {
  auto g = [&](Real a) { return num::hurwitz_zeta(s1, a, c) * num::hurwitz_zeta(s2, a, c); };
  const Complex g0 = num::riemann_zeta(s1, c) * num::riemann_zeta(s2, c);
  auto f = [&](Real a) {
    const Complex ga = g(a);
    return (ga - g0) * std::pow(a, -s) + ga * num::hurwitz_zeta(s, a + 1, c);
  };
  return -g0 + (s - 1) * quad::tanh_sinh_01(f, kQuadTol).value;
}

void add_cor5(Entries& out) {
  out.push_back({{"cor5.closed.m1m1", "pair integral minus zeta(-1)^2 = -1/180",
                  "lim (s->1-) of integral of zeta(s1,a) zeta(s2,a) (s-1) zeta(s,a)", {{"s1", "-1"}, {"s2", "-1"}},
                  1e-12L},
                 [](const PrecisionConfig& c) { return numeric(ibp::corollary5_rhs(-1, -1, c), Real(-1) / 180); }});
  out.push_back({{"cor5.closed.m1m2", "pair integral vanishes and zeta(-2) = 0",
                  "lim (s->1-) of integral of zeta(s1,a) zeta(s2,a) (s-1) zeta(s,a)", {{"s1", "-1"}, {"s2", "-2"}},
                  1e-12L},
                 [](const PrecisionConfig& c) { return numeric(ibp::corollary5_rhs(-1, -2, c), 0); }});
  out.push_back({{"cor5.limit.s0.999", "quadrature at s = 0.999 approaches the closed-form limit",
                  "lim (s->1-) of integral of zeta(s1,a) zeta(s2,a) (s-1) zeta(s,a)",
                  {{"s1", "-1"}, {"s2", "-1"}, {"s", "0.999"}}, 1e-3L},
                 [](const PrecisionConfig& c) {
                   return numeric(cor5_lhs(-1, -1, 0.999L, c), ibp::corollary5_rhs(-1, -1, c));
                 }});
  out.push_back({{"cor5.limit.monotone", "deviation from the limit shrinks along s = 0.9, 0.99, 0.999 (violations)",
                  "lim (s->1-) of integral of zeta(s1,a) zeta(s2,a) (s-1) zeta(s,a)",
                  {{"s1", "-1"}, {"s2", "-1"}}, 0, true},
                 [](const PrecisionConfig& c) {
                   const Complex limit = ibp::corollary5_rhs(-1, -1, c);
                   Real prev = INFINITY;
                   long bad = 0;
                   for (Real s : {0.9L, 0.99L, 0.999L}) {
                     const Real dev = std::abs(cor5_lhs(-1, -1, s, c) - limit);
                     if (!(dev < prev)) ++bad;
                     prev = dev;
                   }
                   return rational(BigRational(bad), 0);
                 }});
}

RatPoly product_fold(std::span<const unsigned> idx) {
  RatPoly p = RatPoly::constant(1);
  for (unsigned m : idx) p = exact::poly_mul(p, exact::bernoulli_polynomial(m));
  return p;
}

void add_cor6(Entries& out) {
  const std::vector<std::vector<unsigned>> sets = {{1, 1}, {2, 2},    {1, 2},       {1, 1, 1},   {2, 3, 4},
                                                   {3, 3, 6}, {1, 2, 3, 4}, {5, 7}, {2, 2, 2, 2}, {6, 6}};
  for (const auto& idx : sets) {
    const unsigned n = std::accumulate(idx.begin(), idx.end(), 0u);
    out.push_back({{"cor6.product." + tag_of(idx), "Newton-Cotes evaluation vs expanded polynomial integral",
                    "integral over [0,1] of prod B_{m_i}(a) is rational", {{"indices", join(idx)}}, 0, true},
                   [idx](const PrecisionConfig&) {
                     return rational(exact::bernoulli_product_integral(idx), exact::poly_integral_01(product_fold(idx)));
                   }});
    if (n % 2 == 1) {
      out.push_back({{"cor6.odd." + tag_of(idx), "odd total degree integrates to 0",
                      "integral of prod B_{m_i}(a) vanishes when sum m_i is odd", {{"indices", join(idx)}}, 0, true},
                     [idx](const PrecisionConfig&) { return rational(exact::bernoulli_product_integral(idx), 0); }});
    }
  }
}

struct IbpCase {
  std::vector<unsigned> ms;
  Complex s;
};

void add_ibp_family(Entries& out, int r) {
  const std::string prefix = r == 0 ? "cor7" : "cor8";
  const std::string anchor = r == 0 ? "integral of prod zeta(-m_i,a) zeta(s,a) as a combination of zeta(s-k)"
                                    : "integral of prod zeta(-m_i,a) zeta'(s,a) as a combination of zeta^(j)(s-k)";
  const std::vector<IbpCase> cases = {{{0}, -0.5L}, {{1, 2}, Complex(-1.3L, 0.7L)}, {{0, 0}, 0.4L}, {{3}, -2.2L},
                                      {{1, 1}, Complex(0.5L, 0.5L)}};
  int k = 0;
  for (const auto& cs : cases) {
    out.push_back({{prefix + ".quad." + std::to_string(k++), "symbolic reduction evaluated vs tanh-sinh quadrature",
                    anchor, {{"ms", join(cs.ms)}, {"r", std::to_string(r)}, {"s", fmt(cs.s)}}, 1e-7L},
                   [cs, r](const PrecisionConfig& c) {
                     const RatPoly p = ibp::zeta_product_poly(cs.ms);
                     auto f = [&](Real a) { return p.eval(a) * num::hurwitz_zeta_deriv(r, cs.s, a, c); };
                     return numeric(ibp::eval_combination(ibp::integral_poly_zeta(cs.ms, r), cs.s, c),
                                    quad::tanh_sinh_01(f, kQuadTol).value);
                   }});
  }
  const std::vector<std::vector<unsigned>> shift_sets = {{0}, {1, 2}, {2, 2, 3}, {5}};
  for (const auto& ms : shift_sets) {
    out.push_back({{prefix + ".shift." + tag_of(ms), "atoms outside 1 <= k <= N or j > r (count)", anchor,
                    {{"ms", join(ms)}, {"r", std::to_string(r)}}, 0, true},
                   [ms, r](const PrecisionConfig&) {
                     long n = 0;
                     for (unsigned m : ms) n += m + 1;
                     long bad = 0;
                     const auto lc = ibp::integral_poly_zeta(ms, r);
                     for (const auto& [atom, coeff] : lc.terms()) {
                       if (atom.shift < 1 || atom.shift > n || atom.deriv_order > r) ++bad;
                     }
                     return rational(BigRational(bad), 0);
                   }});
  }
  if (r != 0) return;
  // At s = -m the integrand is a polynomial and the integral is a rational
  // Bernoulli-product value.
  const std::vector<std::pair<std::vector<unsigned>, unsigned>> exact_cases = {{{0}, 1}, {{1, 2}, 2}, {{2}, 3}, {{0, 1}, 4}};
  for (const auto& [ms, m] : exact_cases) {
    out.push_back({{"cor7.exact." + tag_of(ms) + ".m" + std::to_string(m),
                    "reduction at s = -m vs exact Bernoulli-product integral", anchor,
                    {{"ms", join(ms)}, {"s", "-" + std::to_string(m)}}, 1e-15L},
                   [ms, m](const PrecisionConfig& c) {
                     std::vector<unsigned> idx;
                     BigRational scale = 1;
                     for (unsigned mi : ms) {
                       idx.push_back(mi + 1);
                       scale *= BigRational(-1, static_cast<long>(mi) + 1);
                     }
                     idx.push_back(m + 1);
                     scale *= BigRational(-1, static_cast<long>(m) + 1);
                     const BigRational value = scale * exact::bernoulli_product_integral(idx);
                     return numeric(ibp::eval_combination(ibp::integral_poly_zeta(ms, 0), -Real(m), c), value.to_real());
                   }});
  }
}

void add_cor9(Entries& out) {
  const std::string anchor = "integral of zeta(0,a) zeta(1-s,a) zeta(2-s,a) in closed form";
  out.push_back({{"cor9.exact.s2", "closed form at s = 2 vs -1/360", anchor, {{"s", "2"}}, 1e-10L},
                 [](const PrecisionConfig& c) { return numeric(ibp::corollary9(2, c), Real(-1) / 360); }});
  out.push_back({{"cor9.exact.s3", "closed form at s = 3 vs -(1/6) integral of B_1 B_2 B_3", anchor, {{"s", "3"}}, 1e-10L},
                 [](const PrecisionConfig& c) {
                   const unsigned idx[] = {1, 2, 3};
                   const BigRational v = exact::bernoulli_product_integral(idx) * BigRational(-1, 6);
                   return numeric(ibp::corollary9(3, c), v.to_real());
                 }});
  out.push_back({{"cor9.quad.s2.5", "closed form vs tanh-sinh quadrature", anchor, {{"s", "2.5"}}, 1e-8L},
                 [](const PrecisionConfig& c) {
                   const Real s = 2.5L;
                   auto f = [&](Real a) {
                     return num::hurwitz_zeta(0, a, c) * num::hurwitz_zeta(1 - s, a, c) * num::hurwitz_zeta(2 - s, a, c);
                   };
                   return numeric(ibp::corollary9(s, c), quad::tanh_sinh_01(f, kQuadTol).value);
                 }});
}

void add_pair(Entries& out) {
  const std::string anchor = "integral of zeta(s1,a) zeta(s2,a) over [0,1] in closed form";
  out.push_back({{"pair.exact.0.0", "closed form at (0, 0) vs 1/12", anchor, {{"s1", "0"}, {"s2", "0"}}, 1e-10L},
                 [](const PrecisionConfig& c) { return numeric(ibp::pair_integral(0, 0, c), Real(1) / 12); }});
  out.push_back({{"pair.exact.m1.m1", "closed form at (-1, -1) vs 1/720", anchor, {{"s1", "-1"}, {"s2", "-1"}}, 1e-10L},
                 [](const PrecisionConfig& c) { return numeric(ibp::pair_integral(-1, -1, c), Real(1) / 720); }});
  out.push_back({{"pair.exact.0.m1", "closed form at (0, -1) vanishes", anchor, {{"s1", "0"}, {"s2", "-1"}}, 1e-12L},
                 [](const PrecisionConfig& c) { return numeric(ibp::pair_integral(0, -1, c), 0); }});
  out.push_back({{"pair.symmetry", "swapping s1 and s2", anchor, {{"s1", "-0.3+0.2i"}, {"s2", "-1.7"}}, 1e-12L},
                 [](const PrecisionConfig& c) {
                   const Complex s1(-0.3L, 0.2L), s2(-1.7L, 0);
                   return numeric(ibp::pair_integral(s1, s2, c), ibp::pair_integral(s2, s1, c));
                 }});
  out.push_back({{"pair.quad", "closed form vs tanh-sinh quadrature", anchor, {{"s1", "-0.5"}, {"s2", "0.3"}}, 1e-8L},
                 [](const PrecisionConfig& c) {
                   const Complex s1 = -0.5L, s2 = 0.3L;
                   auto f = [&](Real a) { return num::hurwitz_zeta(s1, a, c) * num::hurwitz_zeta(s2, a, c); };
                   return numeric(ibp::pair_integral(s1, s2, c), quad::tanh_sinh_01(f, kQuadTol).value);
                 }});
}

}  // namespace

void add_integral_checks(Entries& out) {
  add_cor1(out);
  add_cor2(out);
  add_cor3(out);
  add_cor4(out);
  add_cor5(out);
  add_cor6(out);
  add_ibp_family(out, 0);
  add_ibp_family(out, 1);
  add_cor9(out);
  add_pair(out);
}

}  // namespace zetalab::verify::detail
