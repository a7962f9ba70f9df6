#include <stdexcept>
#include <utility>

#include "zetalab/ibp.hpp"

namespace zetalab::ibp {

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by the zero polynomial");
  RatPoly rem = a;
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<BigRational> quot(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree()) - db + 1 : 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto k = static_cast<std::size_t>(rem.degree()) - db;
    const BigRational c = rem.leading() / b.leading();
    quot[k] = c;
    rem -= RatPoly::monomial(c, k) * b;
  }
  return {RatPoly(std::move(quot)), rem};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (BigRational(1) / a.leading());
}

RationalFunction::RationalFunction(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  const RatPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  const BigRational lead = den_.leading();
  if (!(lead == BigRational(1))) {
    const BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::shifted_down() const {
  return RationalFunction(num_.shifted(BigRational(-1)), den_.shifted(BigRational(-1)));
}

Complex RationalFunction::eval(Complex s) const { return num_.eval(s) / den_.eval(s); }

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string("s") + ")/(" + den_.to_string("s") + ")";
}

}  // namespace zetalab::ibp
