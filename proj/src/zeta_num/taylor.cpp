#include <cmath>
#include <string>

#include "zetalab/zeta_num.hpp"

namespace zetalab::num {

Complex hurwitz_taylor(Complex s, Complex alpha, int k, const PrecisionConfig& cfg) {
  if (k < 1) raise(ErrorKind::kPrecondition, "hurwitz_taylor: k must be >= 1");
  if (!(std::abs(alpha) < k - 0.25L)) {
    raise(ErrorKind::kPrecondition, "hurwitz_taylor: need |alpha| < k - 1/4");
  }
  checked(s, "hurwitz_taylor: argument");
  checked(alpha, "hurwitz_taylor: alpha");

  Complex head = 0;
  for (int n = 0; n < k; ++n) {
    const Complex base = alpha + Real(n);
    if (base == Complex(0)) {
      if (s.real() < 0) continue;  // 0^{-s} = 0
      raise(ErrorKind::kPoleProximity, "hurwitz_taylor: (n + alpha)^-s at n + alpha = 0");
    }
    head += std::exp(-s * std::log(base));
  }

  // sum_n (s)_n zeta_k(s+n) (-alpha)^n / n!, with zeta_k(t) = zeta(t, k).
  constexpr int kMaxTerms = 400;
  const Real threshold = cfg.target_abs_error / 10;
  Complex sum = 0;
  Complex weight = 1;  // (s)_n (-alpha)^n / n!
  for (int n = 0; n < kMaxTerms; ++n) {
    const Complex arg = s + Real(n);
    if (std::abs(arg - Real(1)) <= 1e-10L) {
      raise(ErrorKind::kPoleProximity,
            "hurwitz_taylor: s + " + std::to_string(n) + " collides with the pole of zeta_k");
    }
    const Complex term = weight == Complex(0) ? Complex(0) : weight * hurwitz_zeta(arg, k, cfg);
    sum += term;
    if (std::abs(term) < threshold && n > 0) return checked(head + sum, "hurwitz_taylor");
    weight *= arg * (-alpha) / Real(n + 1);
  }
  raise(ErrorKind::kConvergence, "hurwitz_taylor: 400 terms did not reach the threshold");
}

}  // namespace zetalab::num
