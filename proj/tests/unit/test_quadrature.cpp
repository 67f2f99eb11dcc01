#include <cmath>

#include "doctest.h"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

TEST_CASE("Gauss-Legendre is exact to degree 2n - 1") {
  const QuadratureRule r = gauss_legendre(8);
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(s == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("Gauss-Jacobi weight sums and moments") {
  for (auto [a, b] : {std::pair{0.5, -0.5}, std::pair{-0.5, 0.0}, std::pair{1.7, 2.3}, std::pair{-0.9, 0.4}}) {
    const QuadratureRule r = gauss_jacobi(20, a, b);
    double s = 0.0;
    double m1 = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      s += r.weights[i];
      m1 += r.weights[i] * r.nodes[i];
    }
    const double beta = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
    const double mass = std::exp2(a + b + 1) * beta;
    CHECK(s == doctest::Approx(mass).epsilon(1e-12));
    // int t (1-t)^a (1+t)^b dt = mass (b - a) / (a + b + 2)
    CHECK(m1 == doctest::Approx(mass * (b - a) / (a + b + 2)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("affine map") {
  const QuadratureRule r = affine_map(gauss_legendre(6), 1.0, 3.0);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * r.nodes[i] * r.nodes[i];
  CHECK(s == doctest::Approx(26.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("composite grid layout") {
  const GridPtr g = make_grid(16.0, 64, 16);
  CHECK(g->size() == 1024);
  CHECK(g->symmetric());
  CHECK(g->splits_at_zero());
  CHECK(g->panel_width() == doctest::Approx(0.5));
  double s = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    s += g->weight(i);
    CHECK(g->node(g->mirror(i)) == doctest::Approx(-g->node(i)).epsilon(1e-15));
  }
  CHECK(s == doctest::Approx(32.0).epsilon(1e-14));
  CHECK(g->same_nodes(*make_grid(16.0, 64, 16)));
  CHECK_FALSE(g->same_nodes(*make_grid(16.0, 32, 32)));
}

TEST_CASE("Jacobi grid") {
  const GridPtr g = make_jacobi_grid(0.0, 10);
  CHECK(g->size() == 10);
  double s = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) s += g->weight(i);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
}
