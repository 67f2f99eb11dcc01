#include <cmath>

#include "doctest.h"
#include "dunkl/kernels.hpp"
#include "dunkl/transforms.hpp"
#include "oracle_values.hpp"

using namespace dunkl;

namespace {
const RealLineFunction mixed = [](double x) { return Complex{std::exp(-0.5 * x * x) * (1.0 + x), 0.0}; };
}

TEST_CASE("forward transform matches mpmath quadrature") {
  const GridPtr g = make_grid(16.0, 64, 16);
  for (const auto& c : oracle::kTransform) {
    CAPTURE(c.g);
    const TransformPlan plan = TransformPlan::self_dual(g, Order(c.g));
    const SampledFunction F = plan.forward(sample(mixed, g));
    CHECK(std::abs(F(c.lambda) - Complex{c.re, c.im}) < 1e-10);
  }
}

TEST_CASE("round trip and Plancherel at the default grid") {
  const GridPtr g = make_grid(16.0, 64, 16);
  const TransformPlan plan = TransformPlan::self_dual(g, Order(0.5));
  const SampledFunction f = sample(mixed, g);
  const SampledFunction F = plan.forward(f);
  CHECK(relative_l2_error(plan.inverse(F), f, plan.order()) < 1e-12);
  const double lhs = std::pow(lp_norm(f, 2, plan.order()), 2);
  const double rhs = plancherel_const(plan.order()) * std::pow(lp_norm(F, 2, plan.order()), 2);
  CHECK(std::abs(lhs - rhs) / lhs < 1e-12);
}

TEST_CASE("zero maps to zero, grid mismatch rejected") {
  const GridPtr g = make_grid(8.0, 32, 16);
  const TransformPlan plan = TransformPlan::self_dual(g, Order(0.0));
  CHECK(lp_norm(plan.forward(zero_function(g)), INFINITY, Order(0.0)) == 0.0);
  CHECK_THROWS(plan.forward(zero_function(make_grid(8.0, 16, 16))));
}

TEST_CASE("Dunkl operator on the odd part") {
  // Lambda x = 1 + (2g + 1) = 2g + 2 for f(x) = x
  const GridPtr g = make_grid(4.0, 8, 16);
  const Order o(0.7);
  const SampledFunction f = sample([](double x) { return Complex{x, 0.0}; }, [](double) { return Complex{1.0, 0.0}; }, g);
  const SampledFunction lf = dunkl_operator(f, o);
  for (std::size_t i = 0; i < lf.size(); ++i) CHECK(std::abs(lf.value(i) - 2.0 * 0.7 - 2.0) < 1e-13);
}
