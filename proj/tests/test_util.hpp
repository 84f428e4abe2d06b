#pragma once

#include <cmath>
#include <functional>

#include "frost/funclib.hpp"

namespace frost_test {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

// FunctionSpec around arbitrary callables, for oracles that need functions
// outside the builtin catalog.
inline frost::FunctionSpec lambda_spec(const char* name,
                                       std::function<double(double)> f,
                                       std::function<double(double)> fprime,
                                       frost::Interval domain = {0.0, 4.0}) {
  frost::FunctionSpec spec;
  spec.name = name;
  spec.f = std::move(f);
  spec.fprime = std::move(fprime);
  spec.domain = domain;
  return spec;
}

}  // namespace frost_test
