#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dunkl/csv_io.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/sampled_function.hpp"

using namespace dunkl;

namespace {
const RealLineFunction gauss = [](double x) { return Complex{std::exp(-0.5 * x * x), 0.0}; };
}

TEST_CASE("interpolation reproduces polynomials and vanishes beyond R") {
  const GridPtr g = make_grid(4.0, 8, 12);
  const SampledFunction p = sample([](double x) { return Complex{x * x * x - 2.0 * x, 0.5 * x}; }, g);
  for (double x : {-3.3, -0.01, 0.0, 1.234, 3.99}) {
    CHECK(std::abs(p(x) - Complex{x * x * x - 2.0 * x, 0.5 * x}) < 1e-12);
  }
  CHECK(p(4.5) == Complex{0.0, 0.0});
}

TEST_CASE("weighted integrals and norms") {
  const GridPtr g = make_grid(16.0, 64, 16);
  const SampledFunction f = sample(gauss, g);
  // int e^{-x^2/2} |x| dx = 2 at gamma = 0
  CHECK(integrate_weighted(f, Order(0.0)).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lp_norm(f, INFINITY, Order(0.0)) < 1.0);
  CHECK(lp_norm(zero_function(g), 2, Order(0.5)) == 0.0);
  CHECK(relative_l2_error(f, f, Order(0.5)) == 0.0);
}

TEST_CASE("arithmetic and grid checks") {
  const GridPtr g = make_grid(4.0, 8, 8);
  const SampledFunction f = sample(gauss, g);
  const SampledFunction two = f + f;
  CHECK(max_abs_error(two, Complex{2.0, 0.0} * f, INFINITY) == 0.0);
  const SampledFunction other = sample(gauss, make_grid(4.0, 4, 8));
  CHECK_THROWS_AS(f + other, GridMismatch);
}

TEST_CASE("differentiation from panel interpolants") {
  const GridPtr g = make_grid(12.0, 48, 16);
  const SampledFunction d = differentiate(sample(gauss, g));
  REQUIRE(d.has_derivative());
  double err = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = g->node(i);
    err = std::max(err, std::abs(d.derivative()[i] + x * std::exp(-0.5 * x * x)));
  }
  CHECK(err < 1e-11);
}

TEST_CASE("CSV round trip and binding") {
  const GridPtr g = make_grid(4.0, 8, 8);
  const SampledFunction f = sample(gauss, g);
  std::stringstream s;
  write_sampled_function(s, f);
  const SampleTable t = read_sample_table(s);
  const SampledFunction back = bind_to_grid(t, g);
  CHECK(max_abs_error(back, f, INFINITY) == 0.0);
  CHECK_THROWS_AS(bind_to_grid(t, make_grid(4.0, 4, 16)), GridMismatch);
}

TEST_CASE("CSV errors") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_sample_table(empty), std::runtime_error);
  std::istringstream header_only("x,re,im\n");
  CHECK_THROWS_AS(read_sample_table(header_only), std::runtime_error);
  std::istringstream bad_header("x,y\n1,2\n");
  CHECK_THROWS_AS(read_sample_table(bad_header), std::runtime_error);
  std::istringstream bad_number("x,re,im\n1,abc,0\n");
  CHECK_THROWS_AS(read_sample_table(bad_number), std::runtime_error);
  CHECK_THROWS(read_sample_table(std::filesystem::path("/nonexistent/file.csv")));
}

TEST_CASE("CSV with derivative columns") {
  std::istringstream in("x,re,im,dre,dim\n0.5,1,0,2,0\n");
  const SampleTable t = read_sample_table(in);
  REQUIRE(t.derivative.size() == 1);
  CHECK(t.derivative[0] == Complex{2.0, 0.0});
}
