#include <algorithm>
#include <cmath>
#include <sstream>

#include "cli/suite_common.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/test_family.hpp"
#include "dunkl/translation.hpp"
#include "dunkl/wavelets.hpp"

namespace dunkl::cli {
namespace {

constexpr const char* kAdmissRef = "admissibility condition";
constexpr const char* kHalfLineRef = "admissibility half-lines agree for real g";
constexpr const char* kRejectRef = "admissibility requires F g(0) = 0";
constexpr const char* kDilationRef = "dilation scaling";
constexpr const char* kAtomRef = "wavelet atoms";
constexpr const char* kCwtRef = "continuous wavelet transform";
constexpr const char* kKRef = "Calderon spectral window K";
constexpr const char* kKernelSpectrumRef = "transform of G equals K";
constexpr const char* kGRef = "Calderon kernel G";
constexpr const char* kPathsRef = "Calderon reconstruction as f * G";
constexpr const char* kConvergenceRef = "Calderon reproducing formula";
constexpr const char* kPointwiseRef = "pointwise inversion formula";

const CalderonWindow kNested[] = {{1.0, 2.0}, {0.5, 4.0}, {0.25, 8.0}, {0.1, 16.0}};

// Generator of the spectrum lambda^2 e^{-lambda^2/2}: applying -Lambda^2 to
// the Gaussian eigenfunction gives (2g + 2 - x^2) e^{-x^2/2} / (2^{g+1} Gamma(g+1)).
RealLineFunction lambda2_generator(double g) {
  const double c = std::exp2(g + 1.0) * std::tgamma(g + 1.0);
  return [g, c](double x) { return Complex{(2.0 * g + 2.0 - x * x) * std::exp(-0.5 * x * x) / c, 0.0}; };
}

// (1/C) int_eps^delta a^4 lambda^4 e^{-a^2 lambda^2} da/a with C = 1/2.
double lambda2_K(double eps, double delta, double lambda) {
  const double u1 = eps * eps * lambda * lambda;
  const double u2 = delta * delta * lambda * lambda;
  return (1.0 + u1) * std::exp(-u1) - (1.0 + u2) * std::exp(-u2);
}

const TransformPlan& desk_plan(const Config& cfg) {
  return cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), cfg.gamma);
}

const TransformPlan& wide_plan(const Config& cfg) {
  return cached_plan(wide_x_grid(cfg), wide_lambda_grid(cfg), cfg.gamma);
}

std::string window_tag(const CalderonWindow& w) {
  std::ostringstream s;
  s << w.eps() << '_' << w.delta();
  return s.str();
}

std::vector<Check> admissibility(const Config& cfg) {
  const TransformPlan& plan = desk_plan(cfg);
  std::vector<Check> out;
  for (double p : {2.0, 1.0}) {
    const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(p), plan);
    out.push_back(upper_bound("wavelet.admissibility.power" + std::to_string(int(p)), kAdmissRef,
                              std::abs(spec.admissibility() - 0.5) / 0.5, 1e-10));
    // half-lines from the quadrature transform of the real generator
    const SampledFunction F = plan.forward(spec.generator());
    const WeightedGrid& lg = *plan.target();
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
      const double l = lg.node(i);
      if (l == 0.0) continue;
      const double v = lg.weight(i) * std::norm(F.value(i)) / std::abs(l);
      (l > 0.0 ? plus : minus) += v;
    }
    out.push_back(upper_bound("wavelet.half_lines.power" + std::to_string(int(p)), kHalfLineRef,
                              std::abs(plus - minus) / plus, 1e-10));
  }
  bool rejected = false;
  try {
    admissibility_constant(sample([](double l) { return Complex{std::exp(-0.5 * l * l), 0.0}; }, plan.target()));
  } catch (const AdmissibilityError&) {
    rejected = true;
  }
  out.push_back(upper_bound("wavelet.rejects_nonvanishing_spectrum", kRejectRef, rejected ? 0.0 : 1.0, 0.0));
  return out;
}

std::vector<Check> dilation(const Config& cfg) {
  const TransformPlan& plan = desk_plan(cfg);
  const Order order = plan.order();
  const RealLineFunction g = lambda2_generator(cfg.gamma);
  const SampledFunction gs = sample(g, plan.source());
  std::vector<Check> out;
  const SampledFunction g1 = sample(dilate(g, 1.0), plan.source());
  out.push_back(upper_bound("wavelet.dilation.identity", kDilationRef, max_abs_error(g1, gs, INFINITY), 0.0));
  const double expect = std::pow(2.0, cfg.gamma + 1.0);
  const double ratio = lp_norm(sample(dilate(g, 2.0), plan.source()), 2, order) / lp_norm(gs, 2, order);
  out.push_back(upper_bound("wavelet.dilation.norm_a2", kDilationRef, std::abs(ratio - expect) / expect, 1e-8));
  const double a = 0.5;
  const SampledFunction lhs = plan.forward(sample(dilate(g, a), plan.source()));
  const SampledFunction Fg = plan.forward(gs);
  const double s = std::pow(a, 2.0 * cfg.gamma + 2.0);
  const SampledFunction rhs =
      transform_values(lhs, [&](double l, Complex) { return s * Fg(a * l); });
  out.push_back(upper_bound("wavelet.dilation.spectrum_a0.5", kDilationRef, relative_l2_error(lhs, rhs, order), 1e-8));
  return out;
}

std::vector<Check> atoms(const Config& cfg) {
  const TransformPlan& plan = desk_plan(cfg);
  const Order order = plan.order();
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan);
  const TranslationRule rule(order, cfg.translation_order);
  std::vector<Check> out;
  const SampledFunction analytic = sample(lambda2_generator(cfg.gamma), plan.source());
  out.push_back(upper_bound("wavelet.generator_closed_form", kAtomRef,
                            relative_max_error(spec.generator(), analytic, INFINITY), 1e-10));
  const RealLineFunction g10 = wavelet_atom(spec, 1.0, 0.0, rule);
  double err = 0.0;
  for (double x = -4.0; x <= 4.0; x += 0.125) err = std::max(err, std::abs(g10(x) - spec.generator()(x)));
  out.push_back(upper_bound("wavelet.atom_unit", kAtomRef, err, 1e-10));
  const double a = 2.0;
  const SampledFunction at = sample(wavelet_atom(spec, a, 0.0, rule), plan.source());
  const double expect = std::pow(a, -(cfg.gamma + 1.0));
  const double ratio = lp_norm(at, 2, order) / lp_norm(spec.generator(), 2, order);
  out.push_back(upper_bound("wavelet.atom_norm_a2", kAtomRef, std::abs(ratio - expect) / expect, 1e-8));
  // independent evaluation: analytic generator, graded higher-order translation rule
  const TranslationRule oracle(order, 2 * cfg.translation_order, 3);
  const RealLineFunction g2 = dilate(lambda2_generator(cfg.gamma), a);
  const RealLineFunction atom = wavelet_atom(spec, a, 1.0, rule);
  const double norm = std::pow(a, -(2.0 * cfg.gamma + 2.0));
  err = 0.0;
  double peak = 0.0;
  for (double x = -4.0; x <= 4.0; x += 0.125) {
    const Complex ref = norm * translate(g2, -1.0, x, oracle);
    err = std::max(err, std::abs(atom(x) - ref));
    peak = std::max(peak, std::abs(ref));
  }
  out.push_back(upper_bound("wavelet.atom_a2_b1", kAtomRef, err / peak, 1e-10));
  return out;
}

std::vector<Check> transform(const Config& cfg) {
  const TransformPlan& plan = desk_plan(cfg);
  const Order order = plan.order();
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
  const auto fam = standard_test_family();
  const SampledFunction f = sample(fam[3].f, plan.source());
  const TranslationRule rule(order, cfg.translation_order, 3);
  const WeightedGrid& xg = *plan.source();
  const std::pair<double, double> pts[] = {{0.5, -1.0}, {1.0, 0.0}, {1.0, 0.7}, {2.0, 1.5}, {4.0, -2.5}};
  std::vector<Check> out;
  double err = 0.0;
  for (const auto& [a, b] : pts) {
    const SampledFunction row = cwt_row(f, spec, a, plan);
    std::size_t k = 0;
    for (std::size_t i = 1; i < xg.size(); ++i) {
      if (std::abs(xg.node(i) - b) < std::abs(xg.node(k) - b)) k = i;
    }
    const Complex direct = cwt_inner_product(f, spec, a, xg.node(k), rule);
    err = std::max(err, std::abs(direct - row.value(k)) / lp_norm(row, INFINITY, order));
  }
  out.push_back(upper_bound("wavelet.cwt_inner_vs_convolution", kCwtRef, err, 1e-8));
  const ScaleGrid scales = ScaleGrid::log_uniform(0.25, 4.0, 8);
  const ScaleSpaceField z = cwt(zero_function(plan.source()), spec, scales, plan);
  double zmax = 0.0;
  for (std::size_t k = 0; k < scales.size(); ++k) zmax = std::max(zmax, lp_norm(z.row(k), INFINITY, order));
  out.push_back(upper_bound("wavelet.cwt_zero", kCwtRef, zmax, 0.0));
  const SampledFunction f2 = sample(fam[1].f, plan.source());
  double lin = 0.0;
  for (double a : {0.5, 2.0}) {
    const SampledFunction sum = cwt_row(f + f2, spec, a, plan);
    const SampledFunction parts = cwt_row(f, spec, a, plan) + cwt_row(f2, spec, a, plan);
    lin = std::max(lin, max_abs_error(sum, parts, INFINITY) / lp_norm(parts, INFINITY, order));
  }
  out.push_back(upper_bound("wavelet.cwt_linearity", kCwtRef, lin, 1e-12));
  return out;
}

std::vector<Check> kernel(const Config& cfg) {
  const TransformPlan& plan = desk_plan(cfg);
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(2.0), plan);
  std::vector<Check> out;
  out.push_back(upper_bound("wavelet.K_empty_window", kKRef, std::abs(calderon_K(spec, CalderonWindow(1.0, 1.0), 1.0)),
                            0.0));
  out.push_back(upper_bound("wavelet.K_wide_window", kKRef,
                            std::abs(calderon_K(spec, CalderonWindow(1e-4, 1e4), 1.0) - 1.0), 1e-6));
  const double quad = calderon_K(spec, CalderonWindow(0.5, 2.0), 1.0);
  out.push_back(upper_bound("wavelet.K_closed_form", kKRef, std::abs(quad - lambda2_K(0.5, 2.0, 1.0)), 1e-10));
  // range and monotone growth over nested windows, on the band 0.2 <= |lambda| <= 4
  double over = 0.0;
  double drop = 0.0;
  double band_min = INFINITY;
  for (double l = 0.2; l <= 4.0 + 1e-12; l += 0.05) {
    double prev = 0.0;
    for (const auto& w : kNested) {
      const double k = calderon_K(spec, w, l);
      over = std::max({over, k - 1.0, -k});
      drop = std::max(drop, prev - k);
      prev = k;
    }
    band_min = std::min(band_min, prev);
  }
  out.push_back(upper_bound("wavelet.K_range", kKRef, over, 1e-12));
  out.push_back(upper_bound("wavelet.K_monotone", kKRef, drop, 1e-12));
  out.push_back(lower_bound("wavelet.K_band_min_0.1_16", kKRef, band_min, 0.98));
  return out;
}

std::vector<Check> kernel_spectrum(const Config& cfg) {
  const TransformPlan& plan = wide_plan(cfg);
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
  const CalderonWindow window(0.5, 4.0);
  const ScaleGrid scales = ScaleGrid::log_gauss(window.eps(), window.delta(), 8, 16);
  const SampledFunction G = calderon_G(spec, scales, plan);
  const SampledFunction FG = plan.forward(G);
  const SampledFunction K = transform_values(FG, [&](double l, Complex) { return Complex{calderon_K(spec, window, l), 0.0}; });
  std::vector<Check> out;
  out.push_back(upper_bound("calderon.transform_of_G", kKernelSpectrumRef, relative_l2_error(FG, K, plan.order()),
                            cfg.tol_kernel_spectrum));
  double asym = 0.0;
  const WeightedGrid& xg = *plan.source();
  for (std::size_t i = 0; i < G.size(); ++i) {
    asym = std::max({asym, std::abs(G.value(i).imag()), std::abs(G.value(i) - G.value(xg.mirror(i)))});
  }
  out.push_back(upper_bound("calderon.G_real_even", kGRef, asym / lp_norm(G, INFINITY, plan.order()), 1e-12));
  const SampledFunction G0 = calderon_G(spec, ScaleGrid::log_uniform(0.5, 4.0, 8).restrict_to(CalderonWindow(1.0, 1.0)),
                                        plan);
  out.push_back(upper_bound("calderon.G_empty_window", kGRef, lp_norm(G0, INFINITY, plan.order()), 0.0));
  return out;
}

std::vector<Check> paths(const Config& cfg) {
  const TransformPlan& plan = wide_plan(cfg);
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
  const ScaleGrid a_grid = cfg.scale_grid();
  const SampledFunction f = sample(gaussian().f, plan.source());
  std::vector<Check> out;
  for (const CalderonWindow& w : {CalderonWindow(0.5, 4.0), CalderonWindow(0.1, 16.0)}) {
    const SampledFunction conv = calderon_reconstruct(f, spec, w, a_grid, plan, CalderonPath::kConvolution);
    const SampledFunction dbl = calderon_reconstruct(f, spec, w, a_grid, plan, CalderonPath::kDoubleIntegral);
    out.push_back(upper_bound("calderon.paths_agree." + window_tag(w), kPathsRef,
                              relative_l2_error(dbl, conv, plan.order()), 1e-6));
  }
  const SampledFunction z = calderon_reconstruct(zero_function(plan.source()), spec, CalderonWindow(0.5, 4.0), a_grid, plan);
  const SampledFunction e = calderon_reconstruct(f, spec, CalderonWindow(1.0, 1.0), a_grid, plan);
  out.push_back(upper_bound("calderon.zero_input", kPathsRef, lp_norm(z, INFINITY, plan.order()), 0.0));
  out.push_back(upper_bound("calderon.empty_window", kPathsRef, lp_norm(e, INFINITY, plan.order()), 0.0));
  return out;
}

std::vector<Check> convergence(const Config& cfg) {
  const TransformPlan& plan = wide_plan(cfg);
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
  const ScaleGrid a_grid = cfg.scale_grid();
  const SampledFunction f = sample(gaussian().f, plan.source());
  std::vector<double> errs;
  for (const auto& w : kNested) {
    errs.push_back(relative_l2_error(calderon_reconstruct(f, spec, w, a_grid, plan), f, plan.order()));
  }
  double ratio = 0.0;
  for (std::size_t i = 1; i < errs.size(); ++i) ratio = std::max(ratio, errs[i] / errs[i - 1]);
  std::vector<Check> out;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    // each window's error, bounded only by the signal itself
    out.push_back(upper_bound("calderon.window_error." + window_tag(kNested[i]), kConvergenceRef, errs[i], 1.0));
  }
  // strictly decreasing: every ratio below 1
  Check dec = upper_bound("calderon.strictly_decreasing", kConvergenceRef, ratio, 1.0);
  dec.pass = ratio < 1.0;
  out.push_back(dec);
  out.push_back(upper_bound("calderon.final_window_error", kConvergenceRef, errs.back(), cfg.tol_calderon));
  return out;
}

std::vector<Check> pointwise(const Config& cfg) {
  const TransformPlan& plan = wide_plan(cfg);
  const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
  const ScaleGrid a_grid = ScaleGrid::log_uniform(1e-2, 1e2, 50);
  const SampledFunction f = sample(gaussian().f, plan.source());
  const SampledFunction rec = pointwise_inverse(f, spec, a_grid, plan);
  const SampledFunction win = calderon_reconstruct(f, spec, CalderonWindow(1e-2, 1e2), a_grid, plan,
                                                   CalderonPath::kDoubleIntegral);
  const SampledFunction z = pointwise_inverse(zero_function(plan.source()), spec, a_grid, plan);
  return {upper_bound("calderon.pointwise_inverse", kPointwiseRef, relative_max_error(rec, f, 4.0), 1e-2),
          upper_bound("calderon.pointwise_matches_window", kPointwiseRef, relative_l2_error(rec, win, plan.order()),
                      1e-12),
          upper_bound("calderon.pointwise_zero", kPointwiseRef, lp_norm(z, INFINITY, plan.order()), 0.0)};
}

}  // namespace

std::vector<GroupEntry> wavelet_groups() {
  return {{"admissibility", admissibility}, {"dilation", dilation}, {"atoms", atoms},
          {"transform", transform},         {"kernel", kernel}};
}

std::vector<GroupEntry> calderon_groups() {
  return {{"kernel_spectrum", kernel_spectrum},
          {"paths", paths},
          {"convergence", convergence},
          {"pointwise", pointwise}};
}

}  // namespace dunkl::cli
