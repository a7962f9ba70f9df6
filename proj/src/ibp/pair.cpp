#include <cmath>
#include <string>

#include "zetalab/ibp.hpp"

namespace zetalab::ibp {
namespace {

constexpr Real kTwoPi = 2 * num::kPi;

Complex factor(const char* name, const std::function<Complex()>& f) {
  try {
    return f();
  } catch (const ZetaError& e) {
    if (e.kind() != ErrorKind::kPoleProximity) throw;
    raise(ErrorKind::kPoleProximity, std::string("pair_integral: ") + name + " is at a pole (" + e.what() + ")");
  }
}

}  // namespace

Complex pair_integral(Complex s1, Complex s2, const PrecisionConfig& cfg) {
  num::checked(s1, "pair_integral: s1");
  num::checked(s2, "pair_integral: s2");
  const Complex g1 = factor("Gamma(1-s1)", [&] { return num::gamma_complex(Real(1) - s1, cfg); });
  const Complex g2 = factor("Gamma(1-s2)", [&] { return num::gamma_complex(Real(1) - s2, cfg); });
  const Complex z = factor("zeta(2-s1-s2)", [&] { return num::riemann_zeta(Real(2) - s1 - s2, cfg); });
  const Complex c = std::cos(num::kPi / 2 * (s1 - s2));
  const Complex scale = Real(2) * std::exp((s1 + s2 - Real(2)) * std::log(kTwoPi));
  return num::checked(scale * g1 * g2 * c * z, "pair_integral");
}

Complex corollary5_rhs(Complex s1, Complex s2, const PrecisionConfig& cfg) {
  if (!(s1.real() < 0) || !(s2.real() < 0)) {
    raise(ErrorKind::kPrecondition, "corollary5_rhs: requires Re s1 < 0 and Re s2 < 0");
  }
  return num::checked(pair_integral(s1, s2, cfg) - num::riemann_zeta(s1, cfg) * num::riemann_zeta(s2, cfg),
                      "corollary5_rhs");
}

Complex corollary9(Complex s, const PrecisionConfig& cfg) {
  if (!(s.real() > 1)) raise(ErrorKind::kPrecondition, "corollary9: requires Re s > 1");
  const Complex g = num::gamma_complex(s, cfg);
  const Complex z = num::riemann_zeta(Real(1) - s, cfg);
  const Complex main = Real(2) * std::exp(Real(-2) * s * std::log(kTwoPi)) * g * g * num::riemann_zeta(Real(2) * s, cfg);
  return num::checked((main - z * z) / (Real(2) * (s - Real(1))), "corollary9");
}

}  // namespace zetalab::ibp
