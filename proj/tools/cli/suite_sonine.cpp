#include <algorithm>
#include <cmath>

#include "cli/suite_common.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/sonine.hpp"
#include "dunkl/test_family.hpp"
#include "dunkl/translation.hpp"

namespace dunkl::cli {
namespace {

constexpr const char* kKernelRef = "Sonine transform maps e_alpha to e_beta";
constexpr const char* kUnitRef = "Sonine transform of the constant";
constexpr const char* kSupBoundRef = "Sonine transform sup-norm bound";
constexpr const char* kTransmutationRef = "transmutation identity";
constexpr const char* kSupportRef = "support of the dual transform";
constexpr const char* kL1Ref = "dual transform L1 bound";
constexpr const char* kDualityRef = "duality relation";
constexpr const char* kMixedRef = "mixed convolution identity";
constexpr const char* kConvRef = "dual transform of a convolution";
constexpr const char* kOperatorRef = "intertwining of the Dunkl operators";
constexpr const char* kFactorRef = "factorization of the dual intertwiner";

// Comparisons involving X g for Gaussian g stay inside this radius: X g has
// an algebraic tail, so grid truncation dominates near R.
constexpr double kInner = 4.0;

SoninePair pair_of(const Config& cfg) { return SoninePair(cfg.alpha, cfg.beta); }

std::string pair_tag(const SoninePair& p) {
  return "a" + order_tag(p.alpha().gamma()).substr(1) + "b" + order_tag(p.beta().gamma()).substr(1);
}

std::vector<Check> kernel_reproduction(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineRule rule(pair, cfg.sonine_order);
  double err = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    const RealLineFunction e = [&](double x) { return dunkl_kernel(pair.alpha(), lambda, x); };
    for (double x = -4.0; x <= 4.0; x += 1.0 / 16.0) {
      err = std::max(err, std::abs(sonine_at(e, x, rule) - dunkl_kernel(pair.beta(), lambda, x)));
    }
  }
  std::vector<Check> out;
  out.push_back(upper_bound("sonine.kernel_reproduction." + pair_tag(pair), kKernelRef, err, cfg.tol_sonine_kernel));
  const RealLineFunction one = [](double) { return Complex{1.0, 0.0}; };
  double unit = 0.0;
  for (double x = -16.0; x <= 16.0; x += 0.25) unit = std::max(unit, std::abs(sonine_at(one, x, rule) - 1.0));
  out.push_back(upper_bound("sonine.constant." + pair_tag(pair), kUnitRef, unit, 1e-12));
  // the family peaks at 0, which is not a grid node; sup over a uniform set containing it
  for (const auto& tf : standard_test_family()) {
    double sup_x = 0.0;
    double sup_f = 0.0;
    for (int k = -512; k <= 512; ++k) {
      const double x = k / 64.0;
      sup_x = std::max(sup_x, std::abs(sonine_at(tf.f, x, rule)));
      sup_f = std::max(sup_f, std::abs(tf.f(x)));
    }
    out.push_back(upper_bound("sonine.sup_bound." + tf.name, kSupBoundRef, sup_x / sup_f, 1.0 + 1e-12));
  }
  return out;
}

std::vector<Check> transmutation_for(const Config& cfg, const SoninePair& pair, double tol, bool with_bounds) {
  const GridPtr xg = default_x_grid(cfg);
  const TransformPlan& pa = cached_plan(xg, default_lambda_grid(cfg), pair.alpha().gamma());
  const TransformPlan& pb = cached_plan(xg, default_lambda_grid(cfg), pair.beta().gamma());
  std::vector<Check> out;
  for (const auto& tf : standard_test_family()) {
    const SampledFunction h = dual_sonine_transform(tf.f, pair, xg, cfg.dual_options());
    const SampledFunction lhs = pa.forward(h);
    const SampledFunction rhs = pb.forward(sample(tf.f, xg));
    out.push_back(upper_bound("sonine.transmutation." + pair_tag(pair) + "." + tf.name, kTransmutationRef,
                              relative_l2_error(lhs, rhs, pa.order()), tol));
    if (with_bounds) {
      const double ratio = lp_norm(h, 1, pair.alpha()) / lp_norm(sample(tf.f, xg), 1, pair.beta());
      out.push_back(upper_bound("sonine.dual_l1_bound." + tf.name, kL1Ref, ratio, 1.0 + 1e-10));
    }
  }
  return out;
}

std::vector<Check> transmutation(const Config& cfg) {
  return transmutation_for(cfg, pair_of(cfg), cfg.tol_transmutation, true);
}

std::vector<Check> singular_pair(const Config& cfg) {
  // beta - alpha < 1: the kernel exponent is negative
  return transmutation_for(cfg, SoninePair(0.5, 1.0), 1e-4, false);
}

std::vector<Check> support(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const RealLineFunction bump = [](double x) {
    const double s = 1.0 - x * x;
    return Complex{s > 0.0 ? s * s * s : 0.0, 0.0};
  };
  const GridPtr xg = default_x_grid(cfg);
  const SampledFunction h = dual_sonine_transform(bump, pair, xg, cfg.dual_options());
  const SampledFunction v = dual_intertwining_V(bump, pair.alpha(), xg, cfg.dual_options());
  double outside = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (std::abs(xg->node(i)) > 1.0) outside = std::max({outside, std::abs(h.value(i)), std::abs(v.value(i))});
  }
  return {upper_bound("sonine.dual_support", kSupportRef, outside, 0.0)};
}

std::vector<Check> duality(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineRule rule(pair, cfg.sonine_order);
  const GridPtr xg = default_x_grid(cfg);
  const auto fam = standard_test_family();
  // parity-matched pairs; mismatched parities give 0 = 0
  const std::pair<int, int> cases[] = {{0, 0}, {1, 1}, {3, 2}, {2, 0}};
  std::vector<Check> out;
  for (const auto& [i, j] : cases) {
    const SampledFunction xf = sonine_transform(fam[i].f, xg, rule);
    const SampledFunction g = sample(fam[j].f, xg);
    const Complex lhs = integrate_weighted(pointwise_product(xf, g), pair.beta());
    const SampledFunction tg = dual_sonine_transform(fam[j].f, pair, xg, cfg.dual_options());
    const Complex rhs = integrate_weighted(pointwise_product(sample(fam[i].f, xg), tg), pair.alpha());
    out.push_back(upper_bound("sonine.duality." + fam[i].name + "." + fam[j].name, kDualityRef,
                              std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)), cfg.tol_duality));
  }
  return out;
}

std::vector<Check> mixed_convolution(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const SonineRule rule(pair, cfg.sonine_order);
  const TranslationRule ta(pair.alpha(), cfg.translation_order);
  const TranslationRule tb(pair.beta(), cfg.translation_order);
  const GridPtr xg = default_x_grid(cfg);
  const auto fam = standard_test_family();
  std::vector<Check> out;
  for (int i : {0, 1}) {
    const TestFunction& f = fam[i];
    const TestFunction g = gaussian();
    // X(tX f *_alpha g)
    const SampledFunction tf = dual_sonine_transform(f.f, pair, xg, cfg.dual_options());
    const SampledFunction inner = dunkl_convolve(g.f, tf, ta);
    const SampledFunction lhs = sonine_transform(inner.as_function(), xg, rule);
    // f *_beta X g
    const SampledFunction xgf = sonine_transform(g.f, xg, rule);
    const SampledFunction rhs = dunkl_convolve(f.f, xgf, tb);
    out.push_back(upper_bound("sonine.mixed_convolution." + f.name + ".gauss", kMixedRef,
                              relative_l2_error(lhs, rhs, pair.beta(), kInner), cfg.tol_mixed));
  }
  return out;
}

std::vector<Check> convolution_intertwining(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const TranslationRule ta(pair.alpha(), cfg.translation_order);
  const TranslationRule tb(pair.beta(), cfg.translation_order);
  const GridPtr xg = default_x_grid(cfg);
  const auto fam = standard_test_family();
  std::vector<Check> out;
  for (int i : {0, 1}) {
    const TestFunction& f = fam[i];
    const TestFunction g = gaussian();
    const SampledFunction fg = dunkl_convolve(f.f, sample(g.f, xg), tb);
    const SampledFunction lhs = dual_sonine_transform(fg.as_function(), pair, xg, cfg.dual_options());
    const SampledFunction tf = dual_sonine_transform(f.f, pair, xg, cfg.dual_options());
    const SampledFunction tg = dual_sonine_transform(g.f, pair, xg, cfg.dual_options());
    const SampledFunction rhs = dunkl_convolve(tf, tg, ta);
    out.push_back(upper_bound("sonine.convolution_intertwining." + f.name + ".gauss", kConvRef,
                              relative_l2_error(lhs, rhs, pair.alpha()), cfg.tol_mixed));
  }
  return out;
}

std::vector<Check> operator_intertwining(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const GridPtr xg = default_x_grid(cfg);
  const double kb = pair.beta().gamma() + 0.5;
  std::vector<Check> out;
  for (const auto& tf : standard_test_family()) {
    const RealLineFunction lf = [&](double x) {
      if (x == 0.0) return tf.df(0.0) * (1.0 + 2.0 * kb);
      return tf.df(x) + kb * (tf.f(x) - tf.f(-x)) / x;
    };
    const SampledFunction lhs = dual_sonine_transform(lf, pair, xg, cfg.dual_options());
    const SampledFunction h = dual_sonine_transform(tf.f, pair, xg, cfg.dual_options());
    const SampledFunction rhs = dunkl_operator(differentiate(h), pair.alpha());
    out.push_back(upper_bound("sonine.operator_intertwining." + tf.name, kOperatorRef, max_abs_error(lhs, rhs, kInner),
                              cfg.tol_intertwining));
  }
  return out;
}

std::vector<Check> factorization(const Config& cfg) {
  const SoninePair pair = pair_of(cfg);
  const GridPtr xg = default_x_grid(cfg);
  std::vector<Check> out;
  for (const auto& tf : standard_test_family()) {
    const SampledFunction h = dual_sonine_transform(tf.f, pair, xg, cfg.dual_options());
    const SampledFunction lhs = dual_intertwining_V(h.as_function(), pair.alpha(), xg, cfg.dual_options());
    const SampledFunction rhs = dual_intertwining_V(tf.f, pair.beta(), xg, cfg.dual_options());
    out.push_back(upper_bound("sonine.factorization." + tf.name, kFactorRef,
                              relative_l2_error(lhs, rhs, pair.alpha()), cfg.tol_mixed));
  }
  const SampledFunction zero = dual_intertwining_V([](double) { return Complex{0.0, 0.0}; }, pair.alpha(), xg,
                                                   cfg.dual_options());
  out.push_back(upper_bound("sonine.dual_intertwiner_zero", kFactorRef, lp_norm(zero, INFINITY, pair.alpha()), 0.0));
  return out;
}

}  // namespace

std::vector<GroupEntry> sonine_groups() {
  return {{"kernel_reproduction", kernel_reproduction},
          {"transmutation", transmutation},
          {"singular_pair", singular_pair},
          {"support", support},
          {"duality", duality},
          {"mixed_convolution", mixed_convolution},
          {"convolution_intertwining", convolution_intertwining},
          {"operator_intertwining", operator_intertwining},
          {"factorization", factorization}};
}

}  // namespace dunkl::cli
