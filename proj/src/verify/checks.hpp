#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetalab/verify.hpp"

namespace zetalab::verify::detail {

struct Outcome {
  Value lhs;
  Value rhs;
};

struct Entry {
  CheckSpec spec;
  std::function<Outcome(const num::PrecisionConfig&)> run;
};

using Entries = std::vector<Entry>;

void add_kernel_checks(Entries& out);    // prop*, note, pole, intro, kernel
void add_integral_checks(Entries& out);  // cor*, pair

// Small helpers shared by both files.
std::string fmt(num::Real x);
std::string fmt(num::Complex z);

inline Outcome numeric(num::Complex lhs, num::Complex rhs) { return {lhs, rhs}; }
inline Outcome rational(exact::BigRational lhs, exact::BigRational rhs) { return {std::move(lhs), std::move(rhs)}; }

/// (f(x+h) - f(x-h)) / 2h
num::Complex central_diff(const std::function<num::Complex(num::Real)>& f, num::Real x, num::Real h);

}  // namespace zetalab::verify::detail
