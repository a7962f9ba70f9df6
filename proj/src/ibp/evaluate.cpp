#include <cmath>
#include <map>
#include <string>

#include "zetalab/ibp.hpp"

namespace zetalab::ibp {
namespace {

constexpr Real kDenGuard = 1e-8L;

// Denominators built by the reduction only vanish at integers; check those
// exactly, then fall back to a magnitude test for anything else.
void require_off_poles(const DerivAtom& atom, const RationalFunction& c, Complex s) {
  const RatPoly& den = c.denominator();
  if (den.degree() <= 0) return;
  const Real nearest = std::round(s.real());
  if (std::abs(s - nearest) <= kDenGuard &&
      exact::poly_eval(den, BigRational(static_cast<long>(nearest))).is_zero()) {
    raise(ErrorKind::kPoleProximity,
          "eval_combination: s is within 1e-8 of the pole s = " + std::to_string(static_cast<long>(nearest)) +
              " in the coefficient of zeta^(" + std::to_string(atom.deriv_order) + ")(s-" +
              std::to_string(atom.shift) + ")");
  }
}

}  // namespace

Complex eval_combination(const LinearCombination& lc, Complex s, const PrecisionConfig& cfg) {
  num::checked(s, "eval_combination: argument");
  // Group by shift so each zeta(s-k) derivative family is computed once.
  std::map<int, int> max_order;
  for (const auto& [atom, c] : lc.terms()) {
    require_off_poles(atom, c, s);
    auto& m = max_order[atom.shift];
    m = std::max(m, atom.deriv_order);
  }
  std::map<int, std::vector<Complex>> values;
  for (const auto& [k, j] : max_order) {
    const Complex at = s - Real(k);
    values[k] = j == 0 ? std::vector<Complex>{num::riemann_zeta(at, cfg)}
                       : num::hurwitz_zeta_derivs(j, at, 1, cfg);
  }
  Complex sum = 0;
  for (const auto& [atom, c] : lc.terms()) {
    sum += values[atom.shift][static_cast<std::size_t>(atom.deriv_order)] * c.eval(s);
  }
  return num::checked(sum, "eval_combination");
}

}  // namespace zetalab::ibp
