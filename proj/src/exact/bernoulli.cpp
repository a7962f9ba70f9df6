#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "zetalab/exact.hpp"

namespace zetalab::exact {
namespace {

// Grow-only cache: one writer extends, readers share.
class BernoulliCache {
 public:
  BigRational get(unsigned n) {
    {
      std::shared_lock lock(mu_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mu_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= n) {
      const auto m = static_cast<unsigned>(values_.size());
      // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(sum_{k<m} C(m+1,k) B_k)/(m+1)
      BigRational acc;
      for (unsigned k = 0; k < m; ++k) {
        if (values_[k].is_zero()) continue;
        acc += binomial(m + 1, k) * values_[k];
      }
      values_.push_back(-acc / BigRational(static_cast<long>(m + 1)));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mu_;
  std::vector<BigRational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

// Weights w_j with sum_j w_j (j/n)^k = 1/(k+1) for k = 0..n: Bjorck-Pereyra
// on the Vandermonde system, exact.
std::vector<BigRational> newton_cotes_weights(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<BigRational>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  std::vector<BigRational> x(n + 1), b(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    x[j] = n == 0 ? BigRational(0) : BigRational(static_cast<long>(j), static_cast<long>(n));
    b[j] = BigRational(1, static_cast<long>(j + 1));
  }
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = n; i > k; --i) b[i] -= x[k] * b[i - 1];
  }
  for (unsigned k = n; k-- > 0;) {
    for (unsigned i = k + 1; i <= n; ++i) b[i] /= (x[i] - x[i - k - 1]);
    for (unsigned i = k; i < n; ++i) b[i] -= b[i + 1];
  }
  memo.emplace(n, b);
  return b;
}

}  // namespace

BigRational bernoulli_number(unsigned n) { return cache().get(n); }

RatPoly bernoulli_polynomial(unsigned n) {
  std::vector<BigRational> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) c[i] = binomial(n, i) * bernoulli_number(n - i);
  return RatPoly(std::move(c));
}

BigRational bernoulli_product_integral(std::span<const unsigned> indices) {
  if (indices.empty()) return BigRational(1);
  unsigned degree = 0;
  for (unsigned m : indices) {
    if (m == 0) throw std::invalid_argument("bernoulli_product_integral: indices must be >= 1");
    degree += m;
  }

  std::vector<RatPoly> factors;
  factors.reserve(indices.size());
  for (unsigned m : indices) factors.push_back(bernoulli_polynomial(m));

  const auto w = newton_cotes_weights(degree);
  BigRational sum;
  for (unsigned j = 0; j <= degree; ++j) {
    const BigRational node(static_cast<long>(j), static_cast<long>(degree));
    BigRational value(1);
    for (const auto& f : factors) {
      value *= poly_eval(f, node);
      if (value.is_zero()) break;
    }
    sum += w[j] * value;
  }
  return sum;
}

RatPoly zeta_neg_int_poly(unsigned m) {
  return bernoulli_polynomial(m + 1) * BigRational(-1, static_cast<long>(m + 1));
}

}  // namespace zetalab::exact
