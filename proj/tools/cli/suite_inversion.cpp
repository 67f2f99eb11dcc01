#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <tuple>

#include "cli/suite_common.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/sonine.hpp"
#include "dunkl/sonine_inversion.hpp"
#include "dunkl/test_family.hpp"

namespace dunkl::cli {
namespace {

constexpr const char* kRatioRef = "Plancherel constant ratio";
constexpr const char* kSpectrumRef = "spectrum of the transported wavelet";
constexpr const char* kConstRef = "admissibility constant of the transported wavelet";
constexpr const char* kPreRef = "decay hypotheses on the profile";
constexpr const char* kSymRef = "real even generator";
constexpr const char* kCommuteRef = "wavelet transform commutation with the Sonine transform";
constexpr const char* kInvRef = "inversion from the dual Sonine transform";

const CalderonWindow kNested[] = {{1.0, 2.0}, {0.5, 4.0}, {0.25, 8.0}, {0.1, 16.0}};

const SonineContext& context(const Config& cfg, const SoninePair& pair, bool wide = false) {
  using Key = std::tuple<double, double, bool>;
  static std::map<Key, std::unique_ptr<SonineContext>> cache;
  const Key key{pair.alpha().gamma(), pair.beta().gamma(), wide};
  auto it = cache.find(key);
  if (it == cache.end()) {
    const GridPtr xg = wide ? wide_x_grid(cfg) : default_x_grid(cfg);
    const GridPtr lg = wide ? wide_lambda_grid(cfg) : default_lambda_grid(cfg);
    auto ctx = std::make_unique<SonineContext>(pair, xg, lg, cfg.sonine_order, cfg.dual_options());
    it = cache.emplace(key, std::move(ctx)).first;
  }
  return *it->second;
}

SoninePair pair_of(const Config& cfg) { return SoninePair(cfg.alpha, cfg.beta); }

// max relative deviation of F_beta(X g) from the closed form over the band
double spectrum_error(const DualSonineWavelet& w, const SonineContext& ctx) {
  const SampledFunction F = ctx.beta_plan().forward(w.xg.generator());
  const WeightedGrid& lg = *ctx.lambda_grid();
  double err = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double l = std::abs(lg.node(i));
    if (l < 0.2 || l > 4.0) continue;
    const Complex ref = sonine_image_spectrum(w.g, ctx.pair(), lg.node(i));
    err = std::max(err, std::abs(F.value(i) - ref) / std::abs(ref));
  }
  return err;
}

double commutation_error(const DualSonineWavelet& w, const SonineContext& ctx, const std::vector<double>& scales) {
  const SampledFunction f = sample(gaussian().f, ctx.x_grid());
  double err = 0.0;
  for (double a : scales) {
    const auto [left, right] = commutation_check(f, w, a, ctx);
    err = std::max(err, relative_l2_error(right, left, ctx.pair().beta(), 4.0));
  }
  return err;
}

std::vector<double> window_errors(const DualSonineWavelet& w, const SonineContext& ctx, const Config& cfg) {
  const SampledFunction f = sample(gaussian().f, ctx.x_grid());
  const SampledFunction h = dual_sonine_transform(gaussian().f, ctx.pair(), ctx.x_grid(), ctx.dual_options());
  std::vector<double> errs;
  for (const auto& win : kNested) {
    const SampledFunction rec = invert_dual_sonine(h, w, win, cfg.scale_grid(), ctx);
    errs.push_back(relative_l2_error(rec, f, ctx.pair().beta()));
  }
  return errs;
}

std::vector<Check> spectrum(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineContext& ctx = context(cfg, pair);
  std::vector<Check> out;
  const double ratio = plancherel_ratio(pair);
  if (cfg.alpha == 0.5 && cfg.beta == 1.5) {
    out.push_back(upper_bound("inversion.plancherel_ratio", kRatioRef, std::abs(ratio - 9.0), 1e-14));
  }
  const DualSonineWavelet w = build_dual_sonine_wavelet(cfg.inversion_profile(), ctx);
  out.push_back(upper_bound("inversion.transported_spectrum", kSpectrumRef, spectrum_error(w, ctx), 1e-5));
  // eta = 2(beta - alpha): finite limit ratio * leading coefficient
  const WaveletSpec edge =
      WaveletSpec::from_profile(power_gaussian_profile(2.0 * (cfg.beta - cfg.alpha)), ctx.alpha_plan());
  const Complex at0 = sonine_image_spectrum(edge, pair, 0.0);
  const Complex near0 = sonine_image_spectrum(edge, pair, 1e-4);
  out.push_back(upper_bound("inversion.spectrum_limit_at_zero", kSpectrumRef,
                            std::max(std::abs(at0 - ratio) / ratio, std::abs(near0 - at0) / ratio), 1e-7));
  const double closed = w.xg.admissibility();
  if (cfg.alpha == 0.5 && cfg.beta == 1.5 && cfg.profile_power == 4.0) {
    out.push_back(upper_bound("inversion.admissibility_closed_form", kConstRef, std::abs(closed - 40.5) / 40.5, 1e-10));
  }
  const double quad = admissibility_constant(ctx.beta_plan().forward(w.xg.generator()));
  out.push_back(upper_bound("inversion.admissibility_quadrature", kConstRef, std::abs(quad - closed) / closed, 1e-6));
  const SampledFunction& g = w.g.generator();
  double asym = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    asym = std::max({asym, std::abs(g.value(i).imag()), std::abs(g.value(i) - g.value(g.grid().mirror(i)))});
  }
  out.push_back(upper_bound("inversion.generator_real_even", kSymRef, asym / lp_norm(g, INFINITY, pair.alpha()),
                            1e-12));
  return out;
}

std::vector<Check> preconditions(const Config& cfg) {
  std::vector<Check> out;
  const SonineContext& ctx = context(cfg, pair_of(cfg));
  bool rejected = false;
  try {
    build_dual_sonine_wavelet(power_gaussian_profile(2.0 * (cfg.beta - cfg.alpha)), ctx);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  out.push_back(upper_bound("inversion.rejects_eta_at_threshold", kPreRef, rejected ? 0.0 : 1.0, 0.0));
  // beta - 2 alpha - 1 = 1.5 for (0.5, 3.5); eta = 1 violates it
  rejected = false;
  try {
    const WaveletSpec low = WaveletSpec::from_profile(power_gaussian_profile(1.0), ctx.alpha_plan());
    sonine_image_spectrum(low, SoninePair(cfg.alpha, cfg.alpha + 3.0), 1.0);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  out.push_back(upper_bound("inversion.rejects_slow_decay", kPreRef, rejected ? 0.0 : 1.0, 0.0));
  return out;
}

std::vector<Check> commutation(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineContext& ctx = context(cfg, pair);
  const DualSonineWavelet w = build_dual_sonine_wavelet(cfg.inversion_profile(), ctx);
  std::vector<Check> out;
  out.push_back(upper_bound("inversion.commutation", kCommuteRef, commutation_error(w, ctx, {0.5, 1.0, 2.0}), cfg.tol_commutation));
  // the right side at a = 2 against the unscaled Sonine image of the alpha row
  const SampledFunction f = sample(gaussian().f, ctx.x_grid());
  const SampledFunction right = commutation_check(f, w, 2.0, ctx).second;
  const SampledFunction h = dual_sonine_transform(gaussian().f, pair, ctx.x_grid(), ctx.dual_options());
  const SampledFunction raw = sonine_transform(cwt_row(h, w.g, 2.0, ctx.alpha_plan()).as_function(), ctx.x_grid(),
                                               ctx.rule());
  std::size_t k = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::abs(raw.value(i)) > std::abs(raw.value(k))) k = i;
  }
  const double expect = std::pow(2.0, -2.0 * (cfg.beta - cfg.alpha));
  out.push_back(upper_bound("inversion.commutation_prefactor_a2", kCommuteRef,
                            std::abs(right.value(k) / raw.value(k) - expect), 1e-14));
  const auto [l0, r0] = commutation_check(zero_function(ctx.x_grid()), w, 1.0, ctx);
  out.push_back(upper_bound("inversion.commutation_zero", kCommuteRef,
                            std::max(lp_norm(l0, INFINITY, pair.beta()), lp_norm(r0, INFINITY, pair.beta())), 0.0));
  return out;
}

std::vector<Check> round_trip(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineContext& ctx = context(cfg, pair);
  const DualSonineWavelet w = build_dual_sonine_wavelet(cfg.inversion_profile(), ctx);
  const std::vector<double> errs = window_errors(w, ctx, cfg);
  double ratio = 0.0;
  for (std::size_t i = 1; i < errs.size(); ++i) ratio = std::max(ratio, errs[i] / errs[i - 1]);
  std::vector<Check> out;
  out.push_back(upper_bound("inversion.round_trip", kInvRef, errs.back(), cfg.tol_inversion));
  out.push_back(upper_bound("inversion.non_increasing", kInvRef, ratio, 1.0));
  const SampledFunction z = invert_dual_sonine(zero_function(ctx.x_grid()), w, cfg.window(), cfg.scale_grid(), ctx);
  out.push_back(upper_bound("inversion.zero_input", kInvRef, lp_norm(z, INFINITY, pair.beta()), 0.0));
  return out;
}

std::vector<Check> variants(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineContext& ctx = context(cfg, pair);
  const DualSonineWavelet w = build_dual_sonine_wavelet(cfg.inversion_profile(), ctx);
  const SampledFunction h = dual_sonine_transform(gaussian().f, pair, ctx.x_grid(), ctx.dual_options());
  const CalderonWindow full(cfg.scale_grid().lo(), cfg.scale_grid().hi());
  const SampledFunction ii = invert_dual_sonine(h, w, full, cfg.scale_grid(), ctx);
  const SampledFunction i = invert_dual_sonine_pointwise(h, w, full, cfg.scale_grid(), ctx);
  return {upper_bound("inversion.variants_agree", kInvRef, relative_l2_error(i, ii, pair.beta()), 1e-12)};
}

std::vector<Check> singular_pair(const Config& cfg) {
  // kernel exponent beta - alpha - 1 < 0; eta = 2 > 1 = 2(beta - alpha)
  const SoninePair pair(0.5, 1.0);
  const SonineContext& ctx = context(cfg, pair);
  const DualSonineWavelet w = build_dual_sonine_wavelet(power_gaussian_profile(2.0), ctx);
  const std::vector<double> errs = window_errors(w, ctx, cfg);
  // F_beta(X g) ~ |lambda| at 0, so X g has an algebraic tail the desk grid cuts off
  const SonineContext& wide = context(cfg, pair, true);
  const DualSonineWavelet ww = build_dual_sonine_wavelet(power_gaussian_profile(2.0), wide);
  return {upper_bound("inversion.singular.transported_spectrum", kSpectrumRef, spectrum_error(ww, wide), 1e-4),
          upper_bound("inversion.singular.commutation", kCommuteRef, commutation_error(w, ctx, {0.5, 1.0, 2.0}), 1e-4),
          upper_bound("inversion.singular.round_trip", kInvRef, errs.back(), cfg.tol_inversion)};
}

}  // namespace

std::vector<GroupEntry> inversion_groups() {
  return {{"spectrum", spectrum},     {"preconditions", preconditions}, {"commutation", commutation},
          {"round_trip", round_trip}, {"variants", variants},           {"singular_pair", singular_pair}};
}

}  // namespace dunkl::cli
