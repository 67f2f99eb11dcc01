#include <cmath>

#include "doctest.h"
#include "dunkl/kernels.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

namespace {
const RealLineFunction mixed = [](double x) { return Complex{std::exp(-0.5 * x * x) * (1.0 + x), 0.0}; };
}

TEST_CASE("product formula for several orders") {
  for (double g : {0.0, 0.5, 1.2}) {
    const Order o(g);
    const TranslationRule rule(o, 40);
    const RealLineFunction e = [&](double x) { return dunkl_kernel(o, 0.9, x); };
    for (double x : {-1.7, 0.4, 2.2}) {
      for (double y : {-0.6, 1.3}) CHECK(std::abs(translate(e, x, y, rule) - e(x) * e(y)) < 1e-12);
    }
  }
}

TEST_CASE("translation by zero and the printed sign") {
  const TranslationRule rule(Order(0.5), 40);
  CHECK(std::abs(translate(mixed, 0.0, 1.1, rule) - mixed(1.1)) < 1e-14);
  // the printed sign reflects: T^0 f(y) = f(-y)
  CHECK(std::abs(translate(mixed, 0.0, 1.1, rule, TranslationSign::kAsPrinted) - mixed(-1.1)) < 1e-14);
}

TEST_CASE("translation is symmetric in x and y") {
  const TranslationRule rule(Order(0.5), 40);
  CHECK(std::abs(translate(mixed, 0.7, -1.9, rule) - translate(mixed, -1.9, 0.7, rule)) < 1e-13);
}

TEST_CASE("graded rule agrees with the single rule on smooth data") {
  const Order o(0.5);
  const TranslationRule plain(o, 40);
  const TranslationRule graded(o, 40, 3);
  CHECK(graded.levels() == 3);
  CHECK(std::abs(translate(mixed, 1.3, 2.1, plain) - translate(mixed, 1.3, 2.1, graded)) < 1e-12);
}

TEST_CASE("direct and spectral convolution agree; convolution commutes") {
  const GridPtr g = make_grid(16.0, 64, 16);
  const Order o(0.5);
  const TranslationRule rule(o, 40);
  const TransformPlan plan = TransformPlan::self_dual(g, o);
  const SampledFunction f = sample(mixed, g);
  const SampledFunction h = sample([](double x) { return Complex{std::exp(-x * x), 0.0}; }, g);
  const SampledFunction direct = dunkl_convolve(f, h, rule);
  CHECK(relative_l2_error(direct, dunkl_convolve_spectral(f, h, plan), o) < 1e-10);
  CHECK(relative_l2_error(dunkl_convolve(h, f, rule), direct, o) < 1e-10);
}
