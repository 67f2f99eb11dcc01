#include <algorithm>
#include <cmath>

#include "cli/suite_common.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/test_family.hpp"
#include "dunkl/translation.hpp"

namespace dunkl::cli {
namespace {

constexpr const char* kPlancherelRef = "Plancherel identity";
constexpr const char* kRoundTripRef = "inverse transform";
constexpr const char* kEigenRef = "Gaussian eigenfunction of the transform";
constexpr const char* kOperatorRef = "Dunkl operator eigenfunction";
constexpr const char* kProductRef = "product formula";
constexpr const char* kIdentityRef = "translation by zero is the identity";
constexpr const char* kPrintedRef = "translation sign as printed";
constexpr const char* kWeightRef = "translation weight normalization";
constexpr const char* kConvRef = "transform of a convolution";
constexpr const char* kYoungRef = "convolution norm bound";

constexpr double kProductLambda = 1.3;

std::vector<Check> plancherel_identity(const Config& cfg) {
  std::vector<Check> out;
  for (double g : cfg.gammas) {
    const TransformPlan& plan = cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), g);
    for (const auto& tf : standard_test_family()) {
      const SampledFunction f = sample(tf.f, plan.source());
      const SampledFunction F = plan.forward(f);
      const double lhs = std::pow(lp_norm(f, 2, plan.order()), 2);
      const double rhs = plancherel_const(plan.order()) * std::pow(lp_norm(F, 2, plan.order()), 2);
      out.push_back(upper_bound("plancherel.identity." + tf.name + "." + order_tag(g), kPlancherelRef,
                                std::abs(lhs - rhs) / lhs, cfg.tol_plancherel));
    }
  }
  return out;
}

std::vector<Check> round_trip(const Config& cfg) {
  std::vector<Check> out;
  for (double g : cfg.gammas) {
    const TransformPlan& plan = cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), g);
    for (const auto& tf : standard_test_family()) {
      const SampledFunction f = sample(tf.f, plan.source());
      const SampledFunction back = plan.inverse(plan.forward(f));
      out.push_back(upper_bound("plancherel.round_trip." + tf.name + "." + order_tag(g), kRoundTripRef,
                                relative_l2_error(back, f, plan.order()), cfg.tol_roundtrip));
    }
  }
  return out;
}

std::vector<Check> gaussian_eigen(const Config& cfg) {
  std::vector<Check> out;
  for (double g : cfg.gammas) {
    const TransformPlan& plan = cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), g);
    const SampledFunction F = plan.forward(sample(gaussian().f, plan.source()));
    const double c = std::exp2(g + 1.0) * std::tgamma(g + 1.0);
    double err = 0.0;
    double imag = 0.0;
    double parity = 0.0;
    const WeightedGrid& lg = *plan.target();
    for (std::size_t i = 0; i < F.size(); ++i) {
      const double l = lg.node(i);
      imag = std::max(imag, std::abs(F.value(i).imag()));
      parity = std::max(parity, std::abs(F.value(i) - F.value(lg.mirror(i))));
      if (std::abs(l) > 4.0) continue;
      const double expect = c * std::exp(-0.5 * l * l);
      err = std::max(err, std::abs(F.value(i) - expect) / expect);
    }
    out.push_back(upper_bound("plancherel.gaussian_eigen." + order_tag(g), kEigenRef, err, cfg.tol_eigen));
    out.push_back(upper_bound("plancherel.even_input_real_even." + order_tag(g), kEigenRef, std::max(imag, parity),
                              1e-12));
  }
  return out;
}

std::vector<Check> operator_checks(const Config& cfg) {
  std::vector<Check> out;
  for (double g : cfg.gammas) {
    const TransformPlan& plan = cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), g);
    const Order order = plan.order();
    // F(Lambda f) = i lambda F f
    for (const auto& tf : standard_test_family()) {
      const SampledFunction f = sample(tf.f, tf.df, plan.source());
      const SampledFunction lhs = plan.forward(dunkl_operator(f, order));
      const SampledFunction rhs =
          transform_values(plan.forward(f), [](double l, Complex v) { return Complex{0.0, l} * v; });
      out.push_back(upper_bound("plancherel.operator_transform." + tf.name + "." + order_tag(g), kOperatorRef,
                                relative_l2_error(lhs, rhs, order), cfg.tol_plancherel));
    }
    // Lambda e(i lambda .) = i lambda e(i lambda .)
    const double lambda = kProductLambda;
    const SampledFunction e = sample([&](double x) { return dunkl_kernel(order, lambda, x); },
                                     [&](double x) { return dunkl_kernel_derivative(order, lambda, x); },
                                     plan.source());
    const SampledFunction le = dunkl_operator(e, order);
    double err = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (std::abs(plan.source()->node(i)) > 4.0) continue;
      err = std::max(err, std::abs(le.value(i) - Complex{0.0, lambda} * e.value(i)));
    }
    out.push_back(upper_bound("plancherel.operator_kernel." + order_tag(g), kOperatorRef, err, 1e-10));
  }
  return out;
}

std::vector<Check> product_formula(const Config& cfg) {
  const Order order(cfg.gamma);
  const TranslationRule rule(order, cfg.translation_order);
  const double lambda = kProductLambda;
  const RealLineFunction e = [&](double x) { return dunkl_kernel(order, lambda, x); };
  const double pts[] = {-2.3, -0.8, 0.0, 0.6, 1.7};
  double err = 0.0;
  for (double x : pts) {
    for (double y : pts) {
      const Complex lhs = translate(e, x, y, rule);
      err = std::max(err, std::abs(lhs - e(x) * e(y)));
    }
  }
  return {upper_bound("translation.product_formula." + order_tag(cfg.gamma), kProductRef, err, cfg.tol_product)};
}

std::vector<Check> identity(const Config& cfg) {
  const Order order(cfg.gamma);
  const TranslationRule rule(order, cfg.translation_order);
  std::vector<Check> out;
  for (const auto& tf : standard_test_family()) {
    double err = 0.0;
    for (double y = -4.0; y <= 4.0; y += 0.25) err = std::max(err, std::abs(translate(tf.f, 0.0, y, rule) - tf.f(y)));
    out.push_back(upper_bound("translation.identity." + tf.name, kIdentityRef, err, 1e-10));
  }
  // f(u) = u translates to x + y
  const RealLineFunction lin = [](double u) { return Complex{u, 0.0}; };
  double err = 0.0;
  for (double x : {-1.5, 0.3, 2.0}) {
    for (double y : {-0.7, 0.0, 1.1}) err = std::max(err, std::abs(translate(lin, x, y, rule) - Complex{x + y, 0.0}));
  }
  out.push_back(upper_bound("translation.linear_function", kIdentityRef, err, 1e-12));
  return out;
}

std::vector<Check> printed_sign(const Config& cfg) {
  const Order order(cfg.gamma);
  const TranslationRule rule(order, cfg.translation_order);
  const double lambda = kProductLambda;
  const RealLineFunction e = [&](double x) { return dunkl_kernel(order, lambda, x); };
  double dev = 0.0;
  for (double y = -4.0; y <= 4.0; y += 0.125) {
    dev = std::max(dev, std::abs(translate(e, 0.0, y, rule, TranslationSign::kAsPrinted) - e(y)));
  }
  // pass means the printed sign visibly breaks T^0 = id
  return {lower_bound("translation.printed_sign_breaks_identity", kPrintedRef, dev, cfg.tol_printed_sign)};
}

std::vector<Check> weight(const Config&) {
  std::vector<Check> out;
  for (double g : {0.1, 0.5, 2.0}) {
    const Order order(g);
    const GridPtr jg = make_jacobi_grid(g - 0.5, 24);
    double s = 0.0;
    for (std::size_t i = 0; i < jg->size(); ++i) s += jg->weight(i) * intertwining_const(order) * (1.0 + jg->node(i));
    out.push_back(upper_bound("translation.weight_integral." + order_tag(g), kWeightRef, std::abs(s - 1.0), 1e-10));
  }
  return out;
}

struct ConvolutionCase {
  std::string name;
  TestFunction f;
  SampledFunction g;
  SampledFunction direct;
};

std::vector<ConvolutionCase> convolution_cases(const Config& cfg) {
  const Order order(cfg.gamma);
  const TranslationRule rule(order, cfg.translation_order);
  const GridPtr xg = default_x_grid(cfg);
  const SampledFunction g = sample(gaussian().f, xg);
  std::vector<ConvolutionCase> out;
  for (const auto& tf : standard_test_family()) {
    out.push_back({tf.name + "_gauss", tf, g, dunkl_convolve(tf.f, g, rule)});
  }
  return out;
}

std::vector<Check> convolution(const Config& cfg) {
  const TransformPlan& plan = cached_plan(default_x_grid(cfg), default_lambda_grid(cfg), cfg.gamma);
  const Order order = plan.order();
  std::vector<Check> out;
  for (const auto& c : convolution_cases(cfg)) {
    const SampledFunction f = sample(c.f.f, plan.source());
    const SampledFunction lhs = plan.forward(c.direct);
    const SampledFunction rhs = pointwise_product(plan.forward(f), plan.forward(c.g));
    out.push_back(upper_bound("convolution.transform." + c.name, kConvRef, relative_l2_error(lhs, rhs, order),
                              cfg.tol_plancherel));
    const SampledFunction spectral = dunkl_convolve_spectral(f, c.g, plan);
    out.push_back(upper_bound("convolution.direct_vs_spectral." + c.name, kConvRef,
                              relative_l2_error(c.direct, spectral, order), 1e-8));
    const double f2 = lp_norm(f, 2, order);
    const double f1 = lp_norm(f, 1, order);
    const double g2 = lp_norm(c.g, 2, order);
    out.push_back(upper_bound("convolution.young_2_2_inf." + c.name, kYoungRef,
                              lp_norm(c.direct, INFINITY, order) / (f2 * g2), 4.0));
    out.push_back(upper_bound("convolution.young_1_2_2." + c.name, kYoungRef, lp_norm(c.direct, 2, order) / (f1 * g2),
                              4.0));
  }
  const TranslationRule rule(order, cfg.translation_order);
  const SampledFunction zero = dunkl_convolve(gaussian().f, zero_function(plan.source()), rule);
  out.push_back(upper_bound("convolution.zero", kConvRef, lp_norm(zero, INFINITY, order), 0.0));
  return out;
}

}  // namespace

std::vector<GroupEntry> transform_plancherel_groups() {
  return {{"identity", plancherel_identity},
          {"round_trip", round_trip},
          {"gaussian_eigen", gaussian_eigen},
          {"operator", operator_checks}};
}

std::vector<GroupEntry> translation_groups() {
  return {{"product_formula", product_formula},
          {"identity", identity},
          {"printed_sign", printed_sign},
          {"weight", weight}};
}

std::vector<GroupEntry> convolution_groups() { return {{"transform", convolution}}; }

}  // namespace dunkl::cli
