#include "zetalab/exact.hpp"

#include <algorithm>

namespace zetalab::exact {

RatPoly::RatPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const BigRational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const BigRational& c, std::size_t k) {
  std::vector<BigRational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RatPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational{};
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::shifted(const BigRational& c) const {
  // Repeated synthetic division (Taylor shift); O(n^2) exact operations.
  std::vector<BigRational> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  }
  return RatPoly(std::move(a));
}

std::complex<long double> RatPoly::eval(std::complex<long double> x) const {
  std::complex<long double> acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_real();
  return acc;
}

std::string RatPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    BigRational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string m = mag.denominator() == "1" ? mag.numerator() : mag.to_string();
    if (k == 0) {
      out += m;
      continue;
    }
    if (m != "1") out += m + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) { return a * b; }

BigRational poly_eval(const RatPoly& p, const BigRational& x) {
  BigRational acc;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly poly_reflect(const RatPoly& p) {
  // p(1 - x) = sum_k c_k (1 - x)^k, expanded binomially.
  const auto c = p.coeffs();
  std::vector<BigRational> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      BigRational term = c[k] * binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
      out[i] += (i % 2 == 0) ? term : -term;
    }
  }
  return RatPoly(std::move(out));
}

BigRational poly_integral_01(const RatPoly& p) {
  BigRational sum;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] / BigRational(static_cast<long>(k + 1));
  return sum;
}

}  // namespace zetalab::exact
