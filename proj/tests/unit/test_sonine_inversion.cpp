#include <cmath>
#include <limits>

#include "doctest.h"
#include "dunkl/errors.hpp"
#include "dunkl/sonine_inversion.hpp"

using namespace dunkl;

namespace {
const SonineContext& ctx() {
  static const SonineContext c(SoninePair(0.5, 1.5), make_grid(16.0, 64, 16), make_grid(16.0, 64, 16));
  return c;
}
}  // namespace

TEST_CASE("Plancherel ratio for (0.5, 1.5)") { CHECK(plancherel_ratio(SoninePair(0.5, 1.5)) == doctest::Approx(9.0).epsilon(1e-15)); }

TEST_CASE("transported wavelet: closed-form constant 81/2") {
  const DualSonineWavelet w = build_dual_sonine_wavelet(power_gaussian_profile(4.0), ctx());
  CHECK(w.xg.admissibility() == doctest::Approx(40.5).epsilon(1e-12));
  CHECK(w.xg.order().gamma() == 1.5);
  CHECK(w.xg.decay_exponent() == 2.0);
  CHECK(std::abs(w.xg.spectrum(1.0) - 9.0 * std::exp(-0.5)) < 1e-14);
}

TEST_CASE("profile order at the threshold is rejected") {
  CHECK_THROWS_AS(build_dual_sonine_wavelet(power_gaussian_profile(2.0), ctx()), PreconditionError);
}

TEST_CASE("limit of the transported spectrum at 0") {
  const WaveletSpec two = WaveletSpec::from_profile(power_gaussian_profile(2.0), ctx().alpha_plan());
  const WaveletSpec four = WaveletSpec::from_profile(power_gaussian_profile(4.0), ctx().alpha_plan());
  const WaveletSpec one = WaveletSpec::from_profile(power_gaussian_profile(1.0), ctx().alpha_plan());
  const SoninePair p(0.5, 1.5);
  CHECK(sonine_image_spectrum(two, p, 0.0).real() == doctest::Approx(9.0));
  CHECK(sonine_image_spectrum(four, p, 0.0) == Complex{0.0, 0.0});
  CHECK(sonine_image_spectrum(one, p, 0.0).real() == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(sonine_image_spectrum(one, SoninePair(0.5, 3.5), 1.0), PreconditionError);
  CHECK_THROWS(sonine_image_spectrum(two, SoninePair(1.0, 2.0), 1.0));
}

TEST_CASE("commutation identity and zero input") {
  const DualSonineWavelet w = build_dual_sonine_wavelet(power_gaussian_profile(4.0), ctx());
  const SampledFunction f = sample([](double x) { return Complex{std::exp(-0.5 * x * x) * (1.0 + x), 0.0}; },
                                   ctx().x_grid());
  const auto [left, right] = commutation_check(f, w, 1.0, ctx());
  CHECK(relative_l2_error(right, left, Order(1.5), 4.0) < 1e-10);
  const ScaleGrid s = ScaleGrid::log_uniform(0.01, 100.0, 16);
  const SampledFunction z = invert_dual_sonine(zero_function(ctx().x_grid()), w, CalderonWindow(0.5, 4.0), s, ctx());
  CHECK(lp_norm(z, INFINITY, Order(1.5)) == 0.0);
  CHECK_THROWS_AS(invert_dual_sonine(f, w, CalderonWindow(1e-3, 4.0), s, ctx()), PreconditionError);
}

TEST_CASE("the two inversion variants agree") {
  const DualSonineWavelet w = build_dual_sonine_wavelet(power_gaussian_profile(4.0), ctx());
  const SampledFunction h = dual_sonine_transform([](double x) { return Complex{std::exp(-0.5 * x * x), 0.0}; },
                                                  ctx().pair(), ctx().x_grid());
  const ScaleGrid s = ScaleGrid::log_uniform(0.25, 8.0, 16);
  const CalderonWindow win(0.25, 8.0);
  CHECK(relative_l2_error(invert_dual_sonine_pointwise(h, w, win, s, ctx()), invert_dual_sonine(h, w, win, s, ctx()),
                          Order(1.5)) < 1e-12);
}
