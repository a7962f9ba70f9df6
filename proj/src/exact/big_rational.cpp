#include "zetalab/exact.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace zetalab::exact {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw std::invalid_argument("BigRational: zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den(1);
  if (num.set_str(s.substr(0, slash), 10) != 0) {
    throw std::invalid_argument("BigRational: bad numerator in '" + s + "'");
  }
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0) {
    throw std::invalid_argument("BigRational: bad denominator in '" + s + "'");
  }
  return BigRational(mpq_class(num, den));
}

std::string BigRational::to_string() const { return numerator() + "/" + denominator(); }

long double BigRational::to_real() const {
  if (is_zero()) return 0.0L;
  // 128 bits of mantissa comfortably cover long double's 64.
  mpf_class f(q_, 128);
  std::vector<char> buf(64);
  int n = gmp_snprintf(buf.data(), buf.size(), "%.30Fe", f.get_mpf_t());
  if (n < 0 || static_cast<std::size_t>(n) >= buf.size()) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    gmp_snprintf(buf.data(), buf.size(), "%.30Fe", f.get_mpf_t());
  }
  return std::strtold(buf.data(), nullptr);
}

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational binomial(unsigned n, unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return BigRational(mpq_class(c));
}

BigRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(mpq_class(f));
}

}  // namespace zetalab::exact
