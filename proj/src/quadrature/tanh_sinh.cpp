#include <algorithm>
#include <cmath>

#include "zetalab/quadrature.hpp"

namespace zetalab::quad {
namespace {

// sinh(8) * pi/2 ~ 2341, so the outermost nodes sit ~e^-4682 from the ends.
constexpr Real kTMax = 8;
constexpr int kMinLevel = 3;
constexpr int kMaxLevel = 12;

// Node at parameter t >= 0 mirrored to -t: x(-t) = complement(t).
TanhSinhNode node_at(Real t) {
  const Real u = num::kPi / 2 * std::sinh(t);
  const Real e = std::exp(-2 * u);              // in (0, 1]
  const Real small = e / (1 + e);               // 1 - x for t >= 0
  const Real ch = std::cosh(u);
  const Real w = num::kPi / 4 * std::cosh(t) / (ch * ch);  // dx/dt on (0,1)
  return {1 - small, small, w};
}

Complex sample(const Integrand& f, Real x, int& evals) {
  ++evals;
  return num::checked(f(x), "tanh_sinh_01: integrand");
}

Real component_max(Complex d) { return std::max(std::fabs(d.real()), std::fabs(d.imag())); }

}  // namespace

std::vector<TanhSinhNode> tanh_sinh_nodes(int level) {
  const Real h = std::ldexp(Real(1), -level);
  const auto n = static_cast<int>(kTMax / h);
  std::vector<TanhSinhNode> out;
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) {
    TanhSinhNode nd = node_at(std::fabs(k * h));
    if (k < 0) std::swap(nd.x, nd.complement);
    nd.weight *= h;
    out.push_back(nd);
  }
  return out;
}

QuadResult tanh_sinh_01(const Integrand& f, Real tol, int max_evaluations) {
  int evals = 0;
  // Level 0: step 1, all integer t in [-kTMax, kTMax].
  Complex sum = 0;  // sum of w(t) f(x(t)) over nodes of the current level
  {
    const auto n = static_cast<int>(kTMax);
    const TanhSinhNode c = node_at(0);
    sum += c.weight * sample(f, c.x, evals);
    for (int k = 1; k <= n; ++k) {
      const TanhSinhNode nd = node_at(k);
      sum += nd.weight * (sample(f, nd.x, evals) + sample(f, nd.complement, evals));
    }
  }
  Complex prev = sum;
  Real h = 1;
  Real err = 0;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    // New nodes are the odd multiples of h.
    const auto n = static_cast<long>(kTMax / h);
    if (evals + n + 1 > max_evaluations) break;
    for (long k = 1; k <= n; k += 2) {
      const TanhSinhNode nd = node_at(k * h);
      sum += nd.weight * (sample(f, nd.x, evals) + sample(f, nd.complement, evals));
    }
    const Complex current = sum * h;
    err = component_max(current - prev);
    prev = current;
    if (level >= kMinLevel && err < tol) return {current, err, evals};
  }
  raise(ErrorKind::kConvergence, "tanh_sinh_01: budget exhausted before reaching tolerance");
}

}  // namespace zetalab::quad
