#include <string>

#include "zetalab/calculus.hpp"

namespace zetalab::calc {
namespace {

constexpr int kMaxSymbolicOrder = 6;

void require_order(int r, int max, const char* where) {
  if (r < 0 || r > max) {
    raise(ErrorKind::kPrecondition,
          std::string(where) + ": order must be in [0, " + std::to_string(max) + "]");
  }
}

void add_to(SymbolicSum& sum, std::pair<int, int> key, const BigRational& c) {
  auto [it, inserted] = sum.try_emplace(key, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) sum.erase(it);
}

}  // namespace

std::vector<AntiderivativeTerm> antiderivative_terms(int r) {
  require_order(r, kMaxSymbolicOrder, "antiderivative_terms");
  std::vector<AntiderivativeTerm> out;
  const auto ur = static_cast<unsigned>(r);
  for (unsigned l = 0; l <= ur; ++l) {
    out.push_back({static_cast<int>(l), exact::factorial(ur) / exact::factorial(l),
                   static_cast<int>(ur + 1 - l)});
  }
  return out;
}

std::vector<AntiderivativeTerm> reflected_antiderivative_terms(int r) {
  auto out = antiderivative_terms(r);
  for (auto& t : out) t.coefficient = -t.coefficient;
  return out;
}

SymbolicSum alpha_derivative_symbolic(std::span<const AntiderivativeTerm> terms, Argument arg) {
  const BigRational chain = arg == Argument::kReflected ? BigRational(-1) : BigRational(1);
  SymbolicSum out;
  for (const auto& t : terms) {
    const BigRational c = t.coefficient * chain;
    // (1-s) zeta^(l)(s, .) / (1-s)^p
    add_to(out, {t.deriv_order, t.pole_power - 1}, c);
    if (t.deriv_order > 0) {
      add_to(out, {t.deriv_order - 1, t.pole_power}, c * BigRational(-t.deriv_order));
    }
  }
  return out;
}

Complex antiderivative_eval(int r, Complex s, Real alpha, const PrecisionConfig& cfg) {
  require_order(r, 4, "antiderivative_eval");
  if (std::abs(s - Real(1)) <= 1e-10L) {
    raise(ErrorKind::kPoleProximity, "antiderivative_eval: s is within 1e-10 of 1");
  }
  const auto d = num::hurwitz_zeta_derivs(r, s - Real(1), alpha, cfg);
  const Complex w = Real(1) - s;
  Complex sum = 0;
  for (const auto& t : antiderivative_terms(r)) {
    sum += t.coefficient.to_real() * d[static_cast<std::size_t>(t.deriv_order)] /
           std::pow(w, t.pole_power);
  }
  return num::checked(sum, "antiderivative_eval");
}

}  // namespace zetalab::calc
