#include "euler_maclaurin.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "zetalab/exact.hpp"

namespace zetalab::num::detail {
namespace {

constexpr int kMaxTerms = 20;
constexpr int kMinHead = 1;

const std::array<Real, kMaxTerms + 2>& ratio_table() {
  static const auto table = [] {
    std::array<Real, kMaxTerms + 2> t{};
    for (int j = 0; j < kMaxTerms + 2; ++j) {
      const auto n = static_cast<unsigned>(2 * j);
      t[static_cast<std::size_t>(j)] =
          (exact::bernoulli_number(n) / exact::factorial(n)).to_real();
    }
    return t;
  }();
  return table;
}

// |(s)_n|, computed in log space to stay finite.
Real log_abs_pochhammer(Complex s, int n) {
  Real acc = 0;
  for (int i = 0; i < n; ++i) {
    Real m = std::abs(s + static_cast<Real>(i));
    if (m == 0) return -std::numeric_limits<Real>::infinity();
    acc += std::log(m);
  }
  return acc;
}

Real log_error_estimate(Complex s, Real alpha, int head, int terms) {
  const Real x = head + alpha;
  const Real lx = std::log(x);
  const Real sigma = s.real();
  // First omitted correction term.
  const Real ratio = std::fabs(bernoulli_ratio(terms + 1));
  Real trunc = std::log(ratio) + log_abs_pochhammer(s, 2 * terms + 1) +
               (-sigma - 2 * terms - 1) * lx;
  // Rounding: the head and tail are ~ x^{1-sigma}/|1-sigma| each and cancel.
  Real round = std::log(LDBL_EPSILON) + (1 - sigma) * lx + std::log(Real(head));
  return std::max(trunc, round) + std::log1p(std::exp(-std::fabs(trunc - round)));
}

}  // namespace

Real bernoulli_ratio(int j) { return ratio_table().at(static_cast<std::size_t>(j)); }

void require_alpha(Real alpha, const char* where) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    raise(ErrorKind::kDomain, std::string(where) + ": alpha must be a finite real > 0");
  }
}

EmPlan plan_em(Complex center, Real radius, Real alpha, const PrecisionConfig& cfg) {
  EmPlan fixed{cfg.em_cutoff, cfg.em_tail_terms};
  if (center.real() - radius >= -1) return fixed;

  const std::array<Complex, 4> probes = {center - radius, center + Complex(0, radius),
                                         center - Complex(0, radius), center};
  EmPlan best = fixed;
  Real best_err = std::numeric_limits<Real>::infinity();
  for (int terms = cfg.em_tail_terms; terms <= kMaxTerms; ++terms) {
    for (int head = kMinHead; head <= cfg.em_cutoff; ++head) {
      Real err = -std::numeric_limits<Real>::infinity();
      for (const auto& p : probes) err = std::max(err, log_error_estimate(p, alpha, head, terms));
      if (err < best_err - 1e-9L) {
        best_err = err;
        best = {head, terms};
      }
    }
  }
  return best;
}

Complex expm1c(Complex w) {
  const Real a = w.real();
  const Real b = w.imag();
  const Real sh = std::sin(b / 2);
  const Real re = std::expm1(a) * std::cos(b) - 2 * sh * sh;
  const Real im = std::exp(a) * std::sin(b);
  return {re, im};
}

Complex em_head(Complex s, Real alpha, int head) {
  Complex sum = 0;
  for (int n = 0; n < head; ++n) sum += std::exp(-s * std::log(n + alpha));
  return sum;
}

namespace {

// x^-s / 2 + sum_j B_2j/(2j)! (s)_{2j-1} x^{-s-2j+1}
Complex em_corrections(Complex s, Real x, Complex x_pow, int terms) {
  Complex corr = 0;
  Complex poch = s;           // (s)_{2j-1}
  Complex power = x_pow / x;  // x^{-s-2j+1}
  const Real inv_x2 = 1 / (x * x);
  for (int j = 1; j <= terms; ++j) {
    corr += bernoulli_ratio(j) * poch * power;
    poch *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
    power *= inv_x2;
  }
  return x_pow / Real(2) + corr;
}

}  // namespace

Complex em_remainder(Complex s, Real alpha, EmPlan plan) {
  const Real x = plan.head + alpha;
  const Real lx = std::log(x);
  const Complex x_pow = std::exp(-s * lx);  // x^-s

  // ((x^{1-s}) - 1)/(s-1) = -lx * expm1(w)/w, w = (1-s) lx
  const Complex w = (Real(1) - s) * lx;
  Complex tail;
  if (std::abs(w) < 1e-6L) {
    tail = -lx * (Real(1) + w / Real(2) + w * w / Real(6) + w * w * w / Real(24));
  } else {
    tail = -lx * expm1c(w) / w;
  }
  return tail + em_corrections(s, x, x_pow, plan.terms);
}

Complex em_direct(Complex s, Real alpha, EmPlan plan) {
  const Real x = plan.head + alpha;
  const Complex x_pow = std::exp(-s * std::log(x));
  return em_head(s, alpha, plan.head) + x * x_pow / (s - Real(1)) + em_corrections(s, x, x_pow, plan.terms);
}

std::vector<Complex> regular_taylor(Complex center, Real alpha, int n, const PrecisionConfig& cfg) {
  const EmPlan plan = plan_em(center, cfg.contour_radius, alpha, cfg);
  auto coeffs = contour_taylor([&](Complex s) { return em_remainder(s, alpha, plan); }, center, n,
                               cfg.contour_radius, cfg.contour_points);
  for (int k = 0; k < plan.head; ++k) {
    const Real lk = std::log(k + alpha);
    Complex term = std::exp(-center * lk);
    for (int m = 0; m <= n; ++m) {
      coeffs[static_cast<std::size_t>(m)] += term;
      term *= -lk / Real(m + 1);
    }
  }
  for (auto& c : coeffs) c = checked(c, "hurwitz_zeta_deriv");
  return coeffs;
}

}  // namespace zetalab::num::detail
