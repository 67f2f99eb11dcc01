#include <cmath>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/sonine.hpp"
#include "oracle_values.hpp"

using namespace dunkl;

namespace {
const RealLineFunction mixed = [](double x) { return Complex{std::exp(-0.5 * x * x) * (1.0 + x), 0.0}; };
}

TEST_CASE("Sonine transform matches mpmath, including the singular exponent and |x| > span") {
  for (const auto& c : oracle::kSonine) {
    CAPTURE(c.x);
    const SonineRule rule(SoninePair(c.a, c.b), 32);
    CHECK(std::abs(sonine_at(mixed, c.x, rule) - c.value) < 1e-13);
  }
}

TEST_CASE("Sonine transform at 0 and of constants") {
  const SonineRule rule(SoninePair(0.5, 1.5), 32);
  CHECK(sonine_at(mixed, 0.0, rule) == mixed(0.0));
  const RealLineFunction one = [](double) { return Complex{1.0, 0.0}; };
  for (double x : {-20.0, -3.0, 0.5, 9.0}) CHECK(std::abs(sonine_at(one, x, rule) - 1.0) < 1e-13);
}

TEST_CASE("dual Sonine transform matches mpmath") {
  const GridPtr g = make_grid(16.0, 64, 16);
  for (const auto& c : oracle::kDualSonine) {
    CAPTURE(c.x);
    const SampledFunction h = dual_sonine_transform(mixed, SoninePair(c.a, c.b), g);
    CHECK(std::abs(h(c.x) - c.value) < 1e-10 * std::max(1.0, std::abs(c.value)));
  }
}

TEST_CASE("dual intertwiner matches mpmath") {
  const GridPtr g = make_grid(16.0, 64, 16);
  for (const auto& c : oracle::kDualV) {
    CAPTURE(c.b);
    const SampledFunction h = dual_intertwining_V(mixed, Order(c.b), g);
    CHECK(std::abs(h(c.x) - c.value) < 1e-10);
  }
}

TEST_CASE("slow decay is refused") {
  const GridPtr g = make_grid(16.0, 64, 16);
  const RealLineFunction slow = [](double x) { return Complex{1.0 / (1.0 + x * x), 0.0}; };
  CHECK_THROWS_AS(dual_sonine_transform(slow, SoninePair(0.5, 1.5), g), DecayError);
}

TEST_CASE("rule construction") {
  const SonineRule rule(SoninePair(0.5, 1.0), 24);
  CHECK(rule.order() == 24);
  std::vector<double> t;
  std::vector<double> w;
  rule.nodes_for(20.0, t, w);
  CHECK(t.size() == 3 * 24);
  for (double v : t) CHECK((v > 0.0 && v < 1.0));
}
