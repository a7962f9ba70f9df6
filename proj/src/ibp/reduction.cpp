#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "zetalab/ibp.hpp"

namespace zetalab::ibp {
namespace {

constexpr int kMaxDegree = 64;

// 1/(1-s)^p
RationalFunction inverse_one_minus_s(int p) {
  const RatPoly w{BigRational(1), BigRational(-1)};
  RatPoly den = RatPoly::constant(1);
  for (int i = 0; i < p; ++i) den = den * w;
  return RationalFunction(RatPoly::constant(1), den);
}

class MonomialCache {
 public:
  const LinearCombination& get(int i, int r) {
    {
      std::shared_lock lock(mu_);
      if (auto it = cache_.find({i, r}); it != cache_.end()) return *it->second;
    }
    // Build outside the lock; the recursion re-enters get() for i-1.
    auto value = std::make_unique<LinearCombination>(build(i, r));
    std::unique_lock lock(mu_);
    auto [it, inserted] = cache_.try_emplace({i, r}, std::move(value));
    return *it->second;
  }

 private:
  LinearCombination build(int i, int r) {
    LinearCombination out;
    if (i == 0) return out;  // the integral of zeta^(r)(s, .) over [0,1] vanishes
    const RationalFunction ii = RationalFunction::constant(BigRational(i));
    // a^i times the primitive, at a = 1 (it vanishes at a = 0 for Re s < 1),
    // minus i * integral of a^{i-1} times the primitive.
    if (r == 0) {
      // primitive zeta(s-1, a)/(1-s)
      out.add({0, 1}, inverse_one_minus_s(1));
      out += get(i - 1, 0).shifted_down().scaled(ii * inverse_one_minus_s(1) * RationalFunction::constant(-1));
    } else {
      // primitive zeta'(s-1, a)/(1-s) + zeta(s-1, a)/(1-s)^2
      out.add({1, 1}, inverse_one_minus_s(1));
      out.add({0, 1}, inverse_one_minus_s(2));
      const RationalFunction minus_i = RationalFunction::constant(BigRational(-i));
      out += get(i - 1, 1).shifted_down().scaled(minus_i * inverse_one_minus_s(1));
      out += get(i - 1, 0).shifted_down().scaled(minus_i * inverse_one_minus_s(2));
    }
    return out;
  }

  std::shared_mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<LinearCombination>> cache_;
};

MonomialCache& monomial_cache() {
  static MonomialCache cache;
  return cache;
}

}  // namespace

void LinearCombination::add(DerivAtom atom, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(atom, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
  for (const auto& [atom, c] : o.terms_) add(atom, c);
  return *this;
}

LinearCombination LinearCombination::scaled(const RationalFunction& c) const {
  LinearCombination out;
  for (const auto& [atom, coeff] : terms_) out.add(atom, coeff * c);
  return out;
}

LinearCombination LinearCombination::shifted_down() const {
  LinearCombination out;
  for (const auto& [atom, coeff] : terms_) out.add({atom.deriv_order, atom.shift + 1}, coeff.shifted_down());
  return out;
}

std::string LinearCombination::to_string() const {
  std::string out;
  for (const auto& [atom, coeff] : terms_) {
    out += "zeta^(" + std::to_string(atom.deriv_order) + ")(s-" + std::to_string(atom.shift) + ") * " +
           coeff.to_string() + "\n";
  }
  return out;
}

const LinearCombination& reduce_monomial(int i, int r) {
  if (i < 0 || i > kMaxDegree) throw std::invalid_argument("reduce_monomial: i must be in [0, 64]");
  if (r != 0 && r != 1) throw std::invalid_argument("reduce_monomial: r must be 0 or 1");
  return monomial_cache().get(i, r);
}

LinearCombination reduce_poly(const RatPoly& p, int r) {
  if (p.degree() > kMaxDegree) throw std::invalid_argument("reduce_poly: degree must be <= 64");
  LinearCombination out;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    out += reduce_monomial(static_cast<int>(i), r).scaled(RationalFunction::constant(c[i]));
  }
  return out;
}

RatPoly zeta_product_poly(std::span<const unsigned> ms) {
  unsigned n = 0;
  for (unsigned m : ms) n += m + 1;
  if (n > kMaxDegree) throw std::invalid_argument("integral_poly_zeta: sum of (m_i + 1) must be <= 64");
  RatPoly p = RatPoly::constant(1);
  for (unsigned m : ms) p = p * exact::zeta_neg_int_poly(m);
  return p;
}

LinearCombination integral_poly_zeta(std::span<const unsigned> ms, int r) {
  return reduce_poly(zeta_product_poly(ms), r);
}

}  // namespace zetalab::ibp
