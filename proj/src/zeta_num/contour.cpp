#include <cmath>
#include <string>

#include "zetalab/zeta_num.hpp"

namespace zetalab::num {

std::vector<Complex> contour_taylor(const std::function<Complex(Complex)>& f, Complex center,
                                    int max_order, Real radius, int points) {
  if (max_order < 0 || points <= max_order || !(radius > 0)) {
    raise(ErrorKind::kPrecondition, "contour_taylor: need radius > 0 and points > max_order");
  }
  std::vector<Complex> samples(static_cast<std::size_t>(points));
  std::vector<Complex> unit(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const Real theta = 2 * kPi * k / points;
    unit[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta)};
    samples[static_cast<std::size_t>(k)] =
        checked(f(center + radius * unit[static_cast<std::size_t>(k)]), "contour sample");
  }

  std::vector<Complex> coeffs(static_cast<std::size_t>(max_order) + 1);
  Real scale = 1;
  for (int m = 0; m <= max_order; ++m) {
    Complex acc = 0;
    for (int k = 0; k < points; ++k) {
      // e^{-i m theta_k} = conj(unit[(m k) mod points])
      const auto idx = static_cast<std::size_t>((static_cast<long>(m) * k) % points);
      acc += samples[static_cast<std::size_t>(k)] * std::conj(unit[idx]);
    }
    coeffs[static_cast<std::size_t>(m)] = acc / (Real(points) * scale);
    scale *= radius;
  }
  return coeffs;
}

Complex contour_derivative(const std::function<Complex(Complex)>& f, Complex center, int order,
                           const PrecisionConfig& cfg) {
  auto coeffs = contour_taylor(f, center, order, cfg.contour_radius, cfg.contour_points);
  Real fact = 1;
  for (int i = 2; i <= order; ++i) fact *= i;
  return checked(fact * coeffs[static_cast<std::size_t>(order)], "contour_derivative");
}

}  // namespace zetalab::num
