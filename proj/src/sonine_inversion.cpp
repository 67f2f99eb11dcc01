#include "dunkl/sonine_inversion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {
namespace {

double transport_power(const SoninePair& pair) { return 2.0 * (pair.beta().gamma() - pair.alpha().gamma()); }

void require_alpha_wavelet(const WaveletSpec& g, const SoninePair& pair) {
  if (g.order().gamma() != pair.alpha().gamma()) {
    throw std::invalid_argument("wavelet order must equal alpha of the Sonine pair");
  }
  const double bound = pair.beta().gamma() - 2.0 * pair.alpha().gamma() - 1.0;
  if (!(g.decay_exponent() > bound)) {
    throw PreconditionError("decay exponent " + std::to_string(g.decay_exponent()) + " must exceed beta - 2 alpha - 1 = " +
                            std::to_string(bound));
  }
}

// c_a = a^{-2(beta-alpha)} X[Phi^alpha_g(h)(a, .)] on the x-grid.
SampledFunction transported_row(const SampledFunction& h, const DualSonineWavelet& w, double a,
                                const SonineContext& ctx) {
  const SampledFunction phi = cwt_row(h, w.g, a, ctx.alpha_plan());
  SampledFunction c = sonine_transform(phi.as_function(), ctx.x_grid(), ctx.rule());
  c *= std::pow(a, -transport_power(ctx.pair()));
  return c;
}

// F_beta of the b-integral of c_a against the atoms of X g at scale a.
SampledFunction scale_term_spectrum(const SampledFunction& c, const DualSonineWavelet& w, double a,
                                    const SonineContext& ctx) {
  SampledFunction fc = ctx.beta_plan().forward(c);
  const WeightedGrid& lg = *ctx.lambda_grid();
  std::vector<Complex> v(fc.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w.xg.spectrum(a * lg.node(i)) * fc.value(i);
  return SampledFunction(ctx.lambda_grid(), std::move(v));
}

}  // namespace

SonineContext::SonineContext(SoninePair pair, GridPtr x_grid, GridPtr lambda_grid, int sonine_order, DualOptions dual)
    : pair_(pair),
      alpha_(x_grid, lambda_grid, pair.alpha()),
      beta_(x_grid, lambda_grid, pair.beta()),
      rule_(pair, sonine_order),
      dual_(dual) {}

double plancherel_ratio(const SoninePair& pair) {
  return plancherel_const(pair.alpha()) / plancherel_const(pair.beta());
}

Complex sonine_image_spectrum(const WaveletSpec& g, const SoninePair& pair, double lambda) {
  require_alpha_wavelet(g, pair);
  const double ratio = plancherel_ratio(pair);
  const double p = transport_power(pair);
  if (lambda != 0.0) return ratio * g.spectrum(lambda) / std::pow(std::abs(lambda), p);
  if (g.decay_exponent() > p) return {0.0, 0.0};
  if (g.decay_exponent() < p) return {std::numeric_limits<double>::infinity(), 0.0};
  if (std::isnan(g.leading_coefficient())) {
    throw PreconditionError("limit at 0 needs the leading coefficient of the spectrum");
  }
  return {ratio * g.leading_coefficient(), 0.0};
}

DualSonineWavelet build_dual_sonine_wavelet(const SpectralProfile& profile, const SonineContext& ctx) {
  const SoninePair& pair = ctx.pair();
  const double p = transport_power(pair);
  if (!(profile.eta > p)) {
    throw PreconditionError("profile order " + std::to_string(profile.eta) + " must exceed 2(beta - alpha) = " +
                            std::to_string(p));
  }
  WaveletSpec g = WaveletSpec::from_profile(profile, ctx.alpha_plan());
  require_alpha_wavelet(g, pair);
  SampledFunction xg = sonine_transform(g.generator().as_function(), ctx.x_grid(), ctx.rule());
  // copied into the closure so xg does not depend on g's lifetime
  const RealLineFunction alpha_spectrum = g.spectrum_function();
  const double ratio = plancherel_ratio(pair);
  const double eta = profile.eta;
  const double leading = profile.leading;
  RealLineFunction spectrum = [alpha_spectrum, ratio, p](double lambda) -> Complex {
    if (lambda == 0.0) return {0.0, 0.0};
    return ratio * alpha_spectrum(lambda) / std::pow(std::abs(lambda), p);
  };
  WaveletSpec xspec(std::move(xg), std::move(spectrum), pair.beta(), eta - p, ctx.lambda_grid(), ratio * leading);
  return DualSonineWavelet{std::move(g), std::move(xspec)};
}

std::pair<SampledFunction, SampledFunction> commutation_check(const SampledFunction& f, const DualSonineWavelet& w,
                                                         double a, const SonineContext& ctx) {
  SampledFunction left = cwt_row(f, w.xg, a, ctx.beta_plan());
  const SampledFunction h = dual_sonine_transform(f.as_function(), ctx.pair(), ctx.x_grid(), ctx.dual_options());
  SampledFunction right = transported_row(h, w, a, ctx);
  return {std::move(left), std::move(right)};
}

SampledFunction invert_dual_sonine(const SampledFunction& h, const DualSonineWavelet& w, const CalderonWindow& window,
                                   const ScaleGrid& a_grid, const SonineContext& ctx) {
  require_same_grid(h.grid(), *ctx.x_grid(), "invert_dual_sonine");
  const ScaleGrid scales = a_grid.restrict_to(window);
  if (scales.size() == 0) return zero_function(ctx.x_grid());
  const std::size_t nl = ctx.lambda_grid()->size();
  const long ns = static_cast<long>(scales.size());
  std::vector<std::vector<Complex>> parts(scales.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    const double a = scales.scales()[k];
    const SampledFunction term = scale_term_spectrum(transported_row(h, w, a, ctx), w, a, ctx);
    std::vector<Complex> p(nl);
    for (std::size_t i = 0; i < nl; ++i) p[i] = scales.weights()[k] * term.value(i);
    parts[k] = std::move(p);
  }
  std::vector<Complex> sum(nl, Complex{0.0, 0.0});
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < nl; ++i) sum[i] += p[i];
  }
  for (auto& v : sum) v /= w.xg.admissibility();
  return ctx.beta_plan().inverse(SampledFunction(ctx.lambda_grid(), std::move(sum)));
}

SampledFunction invert_dual_sonine_pointwise(const SampledFunction& h, const DualSonineWavelet& w,
                                             const CalderonWindow& window, const ScaleGrid& a_grid,
                                             const SonineContext& ctx) {
  require_same_grid(h.grid(), *ctx.x_grid(), "invert_dual_sonine_pointwise");
  const ScaleGrid scales = a_grid.restrict_to(window);
  SampledFunction out = zero_function(ctx.x_grid());
  if (scales.size() == 0) return out;
  const long ns = static_cast<long>(scales.size());
  std::vector<SampledFunction> parts(scales.size(), out);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    const double a = scales.scales()[k];
    SampledFunction inner = ctx.beta_plan().inverse(scale_term_spectrum(transported_row(h, w, a, ctx), w, a, ctx));
    inner *= scales.weights()[k];
    parts[k] = std::move(inner);
  }
  for (const auto& p : parts) out += p;
  out *= 1.0 / w.xg.admissibility();
  return out;
}

}  // namespace dunkl
