#include <cmath>
#include <sstream>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/wavelets.hpp"

using namespace dunkl;

namespace {
const GridPtr& grid() {
  static const GridPtr g = make_grid(16.0, 64, 16);
  return g;
}
const TransformPlan& plan() {
  static const TransformPlan p = TransformPlan::self_dual(grid(), Order(0.5));
  return p;
}
}  // namespace

TEST_CASE("admissibility constants of the power profiles") {
  CHECK(WaveletSpec::from_profile(power_gaussian_profile(2.0), plan()).admissibility() ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(WaveletSpec::from_profile(power_gaussian_profile(1.0), plan()).admissibility() ==
        doctest::Approx(0.5).epsilon(1e-12));
  // lambda^4 e^{-lambda^2/2}: int lambda^7 e^{-lambda^2} = 3
  CHECK(WaveletSpec::from_profile(power_gaussian_profile(4.0), plan()).admissibility() ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("admissibility rejections") {
  const RealLineFunction flat = [](double l) { return Complex{std::exp(-0.5 * l * l), 0.0}; };
  CHECK_THROWS_AS(admissibility_constant(sample(flat, grid())), AdmissibilityError);
  CHECK_THROWS_AS(admissibility_constant(zero_function(grid())), AdmissibilityError);
  // odd real spectrum still has equal half-lines; a one-sided one does not
  const RealLineFunction one_sided = [](double l) {
    return Complex{l > 0.0 ? l * l * std::exp(-0.5 * l * l) : 0.5 * l * l * std::exp(-0.5 * l * l), 0.0};
  };
  CHECK_THROWS_AS(admissibility_constant(sample(one_sided, grid())), AdmissibilityError);
}

TEST_CASE("spectrum vanishes at 0 and generator is real and even") {
  const WaveletSpec w = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan());
  CHECK(w.spectrum(0.0) == Complex{0.0, 0.0});
  CHECK(w.decay_exponent() == 2.0);
  const SampledFunction& g = w.generator();
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(g.value(i).imag()) < 1e-14);
    CHECK(std::abs(g.value(i) - g.value(grid()->mirror(i))) < 1e-14);
  }
}

TEST_CASE("windows and scale grids") {
  CHECK_THROWS(CalderonWindow(2.0, 1.0));
  CHECK_THROWS(CalderonWindow(0.0, 1.0));
  CHECK(CalderonWindow(1.0, 1.0).empty());
  const ScaleGrid s = ScaleGrid::log_uniform(0.01, 100.0, 64);
  CHECK(s.size() == 257);
  double sum = 0.0;
  for (double w : s.weights()) sum += w;
  CHECK(sum == doctest::Approx(std::log(1e4)).epsilon(1e-14));
  for (std::size_t k = 1; k < s.size(); ++k) CHECK(s.scales()[k] > s.scales()[k - 1]);
  CHECK_THROWS_AS(s.restrict_to(CalderonWindow(0.001, 1.0)), PreconditionError);
  CHECK(s.restrict_to(CalderonWindow(1.0, 1.0)).size() == 0);
  const ScaleGrid r = s.restrict_to(CalderonWindow(0.1, 16.0));
  CHECK(r.scales().front() == doctest::Approx(0.1));
  CHECK(r.scales().back() == doctest::Approx(16.0));
  const ScaleGrid gl = ScaleGrid::log_gauss(0.5, 4.0, 8, 16);
  double gsum = 0.0;
  for (double w : gl.weights()) gsum += w;
  CHECK(gsum == doctest::Approx(std::log(8.0)).epsilon(1e-14));
}

TEST_CASE("dilation rejects non-positive scales") {
  const RealLineFunction f = [](double x) { return Complex{x, 0.0}; };
  CHECK_THROWS(dilate(f, 0.0));
  CHECK_THROWS(dilate(f, -1.0));
  CHECK(dilate(f, 2.0)(3.0) == Complex{1.5, 0.0});
}

TEST_CASE("K closed form for lambda^2 e^{-lambda^2/2}") {
  const WaveletSpec w = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan());
  for (double l : {0.3, 1.0, 2.5}) {
    const double u1 = 0.25 * l * l;
    const double u2 = 9.0 * l * l;
    const double exact = (1.0 + u1) * std::exp(-u1) - (1.0 + u2) * std::exp(-u2);
    CHECK(calderon_K(w, CalderonWindow(0.5, 3.0), l) == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK(calderon_K(w, CalderonWindow(0.5, 0.5), 1.0) == 0.0);
}

TEST_CASE("field CSV layout and zero input") {
  const WaveletSpec w = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan());
  const ScaleGrid s = ScaleGrid::log_uniform(0.5, 2.0, 2);
  const ScaleSpaceField field = cwt(zero_function(grid()), w, s, plan());
  std::ostringstream out;
  field.write_csv(out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,b,re,im");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == s.size() * grid()->size());
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(lp_norm(field.row(k), INFINITY, Order(0.5)) == 0.0);
  CHECK_THROWS(cwt(zero_function(make_grid(8.0, 32, 16)), w, s, plan()));
}

// g(x/a) must fit inside R = 16, so the window stays small here
TEST_CASE("reconstruction paths agree at a moderate window") {
  const WaveletSpec w = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan());
  const SampledFunction f = sample([](double x) { return Complex{std::exp(-0.5 * x * x), 0.0}; }, grid());
  const ScaleGrid s = ScaleGrid::log_uniform(0.01, 100.0, 32);
  const CalderonWindow win(0.5, 2.0);
  const SampledFunction a = calderon_reconstruct(f, w, win, s, plan(), CalderonPath::kConvolution);
  const SampledFunction b = calderon_reconstruct(f, w, win, s, plan(), CalderonPath::kDoubleIntegral);
  CHECK(relative_l2_error(a, b, Order(0.5)) < 1e-10);
}
