#include <cmath>

#include "zetalab/calculus.hpp"

namespace zetalab::calc {
namespace {

// Sum_l c_l d[l] / w^(r+1-l)
Complex combine(int r, const std::vector<Complex>& d, Complex w) {
  Complex sum = 0;
  for (const auto& t : antiderivative_terms(r)) {
    sum += t.coefficient.to_real() * d[static_cast<std::size_t>(t.deriv_order)] /
           std::pow(w, t.pole_power);
  }
  return sum;
}

}  // namespace

Complex integral_01(int r, Complex s, const PrecisionConfig& cfg) {
  if (r < 0 || r > 4) raise(ErrorKind::kPrecondition, "integral_01: order must be in [0, 4]");
  if (!(s.real() < 1)) raise(ErrorKind::kPrecondition, "integral_01: requires Re s < 1");
  const Complex w = Real(1) - s;
  const auto at_one = num::hurwitz_zeta_derivs(r, s - Real(1), 1, cfg);
  // zeta(s-1, a) = a^{1-s} + zeta(s-1, a+1); every s-derivative of a^{1-s}
  // vanishes as a -> 0+ when Re(1-s) > 0.
  auto at_zero = num::hurwitz_zeta_derivs(r, s - Real(1), 2, cfg);
  at_zero[0] += Real(1);
  return num::checked(combine(r, at_one, w) - combine(r, at_zero, w), "integral_01");
}

Complex integral_1_inf(int r, Complex s, const PrecisionConfig& cfg) {
  if (r < 0 || r > 3) raise(ErrorKind::kPrecondition, "integral_1_inf: order must be in [0, 3]");
  if (!(s.real() > 2)) raise(ErrorKind::kPrecondition, "integral_1_inf: requires Re s > 2");
  // The primitive tends to 0 as a -> inf, so only -F(1) remains.
  const auto d = num::hurwitz_zeta_derivs(r, s - Real(1), 1, cfg);
  return num::checked(-combine(r, d, Real(1) - s), "integral_1_inf");
}

}  // namespace zetalab::calc
