#pragma once

#include <string>
#include <vector>

#include "dunkl/sampled_function.hpp"

namespace dunkl {

/// Analytic function with its derivative, used by identity checks.
struct TestFunction {
  std::string name;
  RealLineFunction f;
  RealLineFunction df;
};

/// e^{-x^2/2}, x e^{-x^2/2}, x^2 e^{-x^2/2}, e^{-x^2/2} cos x.
std::vector<TestFunction> standard_test_family();

TestFunction gaussian();

}  // namespace dunkl
