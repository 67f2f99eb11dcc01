#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl/kernels.hpp"
#include "oracle_values.hpp"

using namespace dunkl;
using Complex = std::complex<double>;

TEST_CASE("normalized Bessel matches mpmath on both sides of the series limit") {
  for (const auto& c : oracle::kBessel) {
    CAPTURE(c.g);
    CAPTURE(c.z);
    const double v = bessel_j(c.g, c.z);
    CHECK(std::abs(v - c.value) <= 1e-14 * std::max(1.0, std::abs(c.value)));
  }
}

TEST_CASE("normalized Bessel at 0 and for negative argument") {
  CHECK(bessel_j(0.7, 0.0) == 1.0);
  CHECK(bessel_j(1.2, -3.3) == doctest::Approx(bessel_j(1.2, 3.3)).epsilon(1e-15));
}

TEST_CASE("Dunkl kernel matches mpmath") {
  for (const auto& c : oracle::kKernel) {
    const Complex v = dunkl_kernel(Order(c.g), c.lambda, c.x);
    CHECK(std::abs(v - Complex{c.re, c.im}) <= 1e-14);
  }
}

TEST_CASE("Dunkl kernel basics") {
  const Order g(0.5);
  CHECK(dunkl_kernel(g, 1.3, 0.0) == Complex{1.0, 0.0});
  // gamma = -1/2 limit is e^{i lambda x}; at gamma = 0.5 |e| <= 1
  for (double x = -10.0; x <= 10.0; x += 0.37) CHECK(std::abs(dunkl_kernel(g, 1.1, x)) <= 1.0 + 1e-14);
  // derivative by central difference
  const double h = 1e-5;
  const Complex fd = (dunkl_kernel(g, 1.3, 0.9 + h) - dunkl_kernel(g, 1.3, 0.9 - h)) / (2.0 * h);
  CHECK(std::abs(fd - dunkl_kernel_derivative(g, 1.3, 0.9)) < 1e-9);
}

TEST_CASE("Plancherel constants") {
  CHECK(plancherel_const(Order(0.5)) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(plancherel_const(Order(1.5)) == doctest::Approx(1.0 / (18.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("Sonine kernel") {
  const SoninePair p(0.5, 1.5);
  CHECK_THROWS_AS(sonine_kernel(p, 0.0, 0.1), std::invalid_argument);
  CHECK(sonine_kernel(p, 1.0, 1.5) == 0.0);
  CHECK(sonine_const(p) == doctest::Approx(std::tgamma(2.5) / std::tgamma(1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(SoninePair(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Order(-0.5), std::invalid_argument);
}

TEST_CASE("intertwining constant") {
  CHECK(intertwining_const(Order(0.5)) == doctest::Approx(std::tgamma(1.5) / std::sqrt(std::numbers::pi)));
}
