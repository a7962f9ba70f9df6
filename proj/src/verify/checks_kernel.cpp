#include <cmath>
#include <cstdio>

#include "checks.hpp"
#include "zetalab/calculus.hpp"

namespace zetalab::verify::detail {

using exact::BigRational;
using num::Complex;
using num::PrecisionConfig;
using num::Real;

std::string fmt(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return buf;
}

std::string fmt(Complex z) { return num::format_complex(z); }

Complex central_diff(const std::function<Complex(Real)>& f, Real x, Real h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

namespace {

constexpr Real kFdStep = 1e-4L;

void add_prop1(Entries& out) {
  // zeta^(r)(s, e) = e^-s (-log e)^r + zeta^(r)(s, 1+e), so the gap to
  // zeta^(r)(s) is O(e) when Re s < 0.
  const Real eps = 1e-12L;
  const std::pair<const char*, Complex> points[] = {{"s-2.5", Complex(-2.5L, 0)}, {"s-2+0.5i", Complex(-2, 0.5L)}};
  for (const auto& [tag, s] : points) {
    for (int r = 0; r <= 2; ++r) {
      out.push_back({{"prop1.cont.r" + std::to_string(r) + "." + tag,
                      "zeta^(r)(s, a) at a = 1e-12 matches zeta^(r)(s)",
                      "continuity at a = 0: zeta^(r)(s,0) = zeta^(r)(s) for Re s < 0",
                      {{"r", std::to_string(r)}, {"s", fmt(s)}, {"a", fmt(eps)}},
                      1e-9L},
                     [r, s, eps](const PrecisionConfig& c) {
                       return numeric(num::hurwitz_zeta_deriv(r, s, eps, c), num::riemann_zeta_deriv(r, s, c));
                     }});
    }
  }
}

void add_prop2(Entries& out) {
  struct P {
    int r;
    Complex s;
    Real a;
  };
  const P points[] = {{0, -1, 0.5L},       {0, -0.5L, 0.7L},          {1, -0.5L, 0.7L},
                      {1, {0.5L, 0.5L}, 1.2L}, {1, 3, 0.9L},          {2, 2, 1},
                      {2, -1.5L, 0.4L},    {2, {-0.3L, 0.2L}, 1.6L}};
  int k = 0;
  for (const auto& p : points) {
    out.push_back({{"prop2.fd." + std::to_string(k++),
                    "a-derivative rule vs central difference of zeta^(r)(s, .)",
                    "d/da zeta^(r)(s,a) = -r zeta^(r-1)(s+1,a) - s zeta^(r)(s+1,a)",
                    {{"r", std::to_string(p.r)}, {"s", fmt(p.s)}, {"a", fmt(p.a)}, {"h", fmt(kFdStep)}},
                    1e-6L},
                   [p](const PrecisionConfig& c) {
                     auto f = [&](Real a) { return num::hurwitz_zeta_deriv(p.r, p.s, a, c); };
                     return numeric(calc::alpha_derivative(p.r, p.s, p.a, c), central_diff(f, p.a, kFdStep));
                   }});
  }
}

void add_prop3(Entries& out) {
  for (int r = 0; r <= 3; ++r) {
    for (Real a : {0.7L, 1.3L}) {
      out.push_back({{"prop3.fd.r" + std::to_string(r) + ".a" + fmt(a),
                      "-r! gamma_{r-1}(a) vs central difference of zeta^(r)(0, .)",
                      "d/da zeta^(r)(0,a) = -r! gamma_{r-1}(a)",
                      {{"r", std::to_string(r)}, {"a", fmt(a)}, {"h", fmt(kFdStep)}},
                      1e-6L},
                     [r, a](const PrecisionConfig& c) {
                       auto f = [&](Real x) { return num::hurwitz_zeta_deriv(r, 0, x, c); };
                       return numeric(calc::alpha_derivative_at_zero(r, a, c), central_diff(f, a, kFdStep));
                     }});
    }
  }
  // The same quantity as the s -> 0 limit of the a-derivative rule:
  // -(d/ds)^r [s zeta(s+1, a)] at s = 0, differentiated on a circle.
  for (int r = 1; r <= 3; ++r) {
    out.push_back({{"prop3.limit.r" + std::to_string(r),
                    "-r! gamma_{r-1}(a) vs contour derivative of s zeta(s+1, a) at 0",
                    "s zeta(s+1,a) = sum gamma_{n-1}(a) s^n",
                    {{"r", std::to_string(r)}, {"a", "0.6"}},
                    1e-8L},
                   [r](const PrecisionConfig& c) {
                     const Real a = 0.6L;
                     auto f = [&](Complex s) { return s * num::hurwitz_zeta(s + Real(1), a, c); };
                     return numeric(calc::alpha_derivative_at_zero(r, a, c),
                                    -num::contour_derivative(f, 0, r, c));
                   }});
  }
}

void add_prop4(Entries& out) {
  for (int r = 1; r <= 2; ++r) {
    out.push_back({{"prop4.fd.r" + std::to_string(r),
                    "derivative of gamma_{r-1} vs central difference",
                    "d/da gamma_{r-1}(a) = -(1/r!) d^r/ds^r [s(s+1) zeta(s+2,a)] at s = 0",
                    {{"r", std::to_string(r)}, {"a", "0.8"}, {"h", fmt(kFdStep)}},
                    1e-6L},
                   [r](const PrecisionConfig& c) {
                     auto f = [&](Real a) { return num::stieltjes(r - 1, a, c); };
                     return numeric(calc::stieltjes_alpha_derivative(r, 0.8L, c), central_diff(f, 0.8L, kFdStep));
                   }});
  }
  for (Real a : {0.8L, 1.0L}) {
    out.push_back({{"prop4.closed.r1.a" + fmt(a), "d/da gamma_0(a) = -zeta(2, a)",
                    "d/da gamma_{r-1}(a) = -(1/r!) d^r/ds^r [s(s+1) zeta(s+2,a)] at s = 0",
                    {{"r", "1"}, {"a", fmt(a)}},
                    1e-9L},
                   [a](const PrecisionConfig& c) {
                     return numeric(calc::stieltjes_alpha_derivative(1, a, c), -num::hurwitz_zeta(2, a, c));
                   }});
    out.push_back({{"prop4.closed.r2.a" + fmt(a), "d/da gamma_1(a) = -(zeta(2, a) + zeta'(2, a))",
                    "d/da gamma_{r-1}(a) = -(1/r!) d^r/ds^r [s(s+1) zeta(s+2,a)] at s = 0",
                    {{"r", "2"}, {"a", fmt(a)}},
                    1e-9L},
                   [a](const PrecisionConfig& c) {
                     const auto d = num::hurwitz_zeta_derivs(1, 2, a, c);
                     return numeric(calc::stieltjes_alpha_derivative(2, a, c), -(d[0] + d[1]));
                   }});
  }
}

void add_note(Entries& out) {
  const std::pair<const char*, Complex> svals[] = {
      {"s-2.5", Complex(-2.5L, 0)}, {"s-0.5", Complex(-0.5L, 0)}, {"s0.5+0.5i", Complex(0.5L, 0.5L)}};
  for (int r = 0; r <= 3; ++r) {
    for (const auto& [tag, s] : svals) {
      for (Real a : {0.2L, 0.7L}) {
        out.push_back({{"note.fwd.r" + std::to_string(r) + "." + tag + ".a" + fmt(a),
                        "zeta^(r)(s,a) - zeta^(r)(s,a+1) = a^-s (-log a)^r",
                        "forward difference in a",
                        {{"r", std::to_string(r)}, {"s", fmt(s)}, {"a", fmt(a)}},
                        1e-8L},
                       [r, s, a](const PrecisionConfig& c) {
                         const Complex lhs = num::hurwitz_zeta_deriv(r, s, a, c) - num::hurwitz_zeta_deriv(r, s, a + 1, c);
                         const Complex rhs = std::exp(-s * std::log(a)) * std::pow(-std::log(a), r);
                         return numeric(lhs, rhs);
                       }});
      }
    }
  }
}

void add_pole(Entries& out) {
  // Leading pole terms: zeta(2, e) ~ 1/e^2 and psi(e) ~ -1/e. "First order"
  // means |deviation| <= 10 e at every rung, and the deviation shrinks.
  const Real rungs[] = {1e-2L, 1e-3L, 1e-4L};
  const std::string tags[] = {"e1e-2", "e1e-3", "e1e-4"};
  for (int i = 0; i < 3; ++i) {
    const Real e = rungs[i];
    out.push_back({{"pole.zeta2." + tags[i], "e^2 zeta(2, e) -> 1", "double pole of zeta(2,a) at a = 0",
                    {{"e", fmt(e)}}, 10 * e},
                   [e](const PrecisionConfig& c) { return numeric(e * e * num::hurwitz_zeta(2, e, c), 1); }});
    out.push_back({{"pole.psi." + tags[i], "e psi(e) -> -1", "simple pole of psi at 0", {{"e", fmt(e)}}, 10 * e},
                   [e](const PrecisionConfig& c) { return numeric(e * num::digamma(e, c), -1); }});
  }
  auto monotone = [rungs](const std::function<Real(Real)>& dev) {
    long bad = 0;
    for (int i = 1; i < 3; ++i) {
      if (!(dev(rungs[i]) < dev(rungs[i - 1]))) ++bad;
    }
    return rational(BigRational(bad), BigRational(0));
  };
  out.push_back({{"pole.zeta2.monotone", "|e^2 zeta(2,e) - 1| decreases along e = 1e-2, 1e-3, 1e-4 (violations)",
                  "double pole of zeta(2,a) at a = 0", {}, 0, true},
                 [monotone](const PrecisionConfig& c) {
                   return monotone([&](Real e) { return std::abs(e * e * num::hurwitz_zeta(2, e, c) - Real(1)); });
                 }});
  out.push_back({{"pole.psi.monotone", "|e psi(e) + 1| decreases along e = 1e-2, 1e-3, 1e-4 (violations)",
                  "simple pole of psi at 0", {}, 0, true},
                 [monotone](const PrecisionConfig& c) {
                   return monotone([&](Real e) { return std::abs(e * num::digamma(e, c) + Real(1)); });
                 }});
}

void add_intro(Entries& out) {
  // The fourth derivative of psi is large near 0.5; a smaller step keeps the
  // O(h^2) difference error well under the tolerance.
  constexpr Real h = 1e-5L;
  for (Real a : {0.5L, 1.0L}) {
    out.push_back({{"intro.psi_chain.r1.a" + fmt(a), "d/da psi(a) = zeta(2, a) vs central difference of psi",
                    "d^r/da^r psi(a) = (-1)^(r-1) r! zeta(r+1,a)", {{"r", "1"}, {"a", fmt(a)}, {"h", fmt(h)}},
                    1e-6L},
                   [a](const PrecisionConfig& c) {
                     auto f = [&](Real x) { return num::digamma(x, c); };
                     return numeric(calc::psi_chain(1, a, c), central_diff(f, a, h));
                   }});
    out.push_back({{"intro.psi_chain.r2.a" + fmt(a), "second derivative of psi vs central difference of the first",
                    "d^r/da^r psi(a) = (-1)^(r-1) r! zeta(r+1,a)", {{"r", "2"}, {"a", fmt(a)}, {"h", fmt(h)}},
                    1e-6L},
                   [a](const PrecisionConfig& c) {
                     auto f = [&](Real x) { return calc::psi_chain(1, x, c); };
                     return numeric(calc::psi_chain(2, a, c), central_diff(f, a, h));
                   }});
  }
  out.push_back({{"intro.psi_gamma0", "psi(1) = -gamma_0(1) = -Euler's constant", "psi(a) = -gamma_0(a)",
                  {{"a", "1"}}, 1e-9L},
                 [](const PrecisionConfig& c) { return numeric(num::digamma(1, c), -num::stieltjes(0, 1, c)); }});
  out.push_back({{"intro.euler_gamma", "gamma_0(1) equals Euler's constant", "psi(a) = -gamma_0(a)", {}, 1e-12L},
                 [](const PrecisionConfig& c) { return numeric(num::stieltjes(0, 1, c), num::kEulerGamma); }});
}

void add_kernel(Entries& out) {
  for (unsigned m = 0; m <= 8; ++m) {
    out.push_back({{"kernel.negint.m" + std::to_string(m), "zeta(-m, a) vs -B_{m+1}(a)/(m+1)",
                    "zeta(-n,a) = -B_{n+1}(a)/(n+1)", {{"m", std::to_string(m)}, {"a", "0.35"}}, 1e-10L},
                   [m](const PrecisionConfig& c) {
                     return numeric(num::hurwitz_zeta(-Real(m), 0.35L, c), exact::zeta_neg_int_poly(m).eval(0.35L));
                   }});
  }
  const Complex svals[] = {{-1.5L, 0}, {0.5L, 1}, {2.5L, 0}, {-3, 0.5L}};
  const Real avals[] = {0.3L, 1.4L};
  int k = 0;
  for (Complex s : svals) {
    for (Real a : avals) {
      out.push_back({{"kernel.taylor." + std::to_string(k++), "Euler-Maclaurin zeta(s,a) vs the disc expansion about a = 0",
                      "zeta(s,a) = sum_{n<k} (n+a)^-s + sum_n (s)_n zeta_k(s+n) (-a)^n / n!",
                      {{"s", fmt(s)}, {"a", fmt(a)}, {"k", "2"}}, 1e-9L},
                     [s, a](const PrecisionConfig& c) {
                       return numeric(num::hurwitz_zeta(s, a, c), num::hurwitz_taylor(s, a, 2, c));
                     }});
    }
  }
}

}  // namespace

void add_kernel_checks(Entries& out) {
  add_prop1(out);
  add_prop2(out);
  add_prop3(out);
  add_prop4(out);
  add_note(out);
  add_pole(out);
  add_intro(out);
  add_kernel(out);
}

}  // namespace zetalab::verify::detail
