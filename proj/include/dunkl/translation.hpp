#pragma once

#include <vector>

#include "dunkl/order.hpp"
#include "dunkl/sampled_function.hpp"
#include "dunkl/transforms.hpp"

namespace dunkl {

/// Which sign multiplies the odd part inside the translation integral.
/// kCorrected uses (x + y) and satisfies T^0 = id; kAsPrinted flips it to
/// (x - y) and exists only to exhibit that T^0 f(y) = f(-y) under it.
enum class TranslationSign { kCorrected, kAsPrinted };

/// Nodes and weights for integrals against W_gamma(-t) dt on (-1, 1).
/// With u = sqrt(x^2 + y^2 - 2xyt) the product formula for e_gamma holds
/// with the reflected weight c (1-t)(1-t^2)^{gamma-1/2}; the unreflected
/// one reproduces only the real part.
/// With levels == 0 this is a single Gauss-Jacobi rule with exponents
/// (gamma + 1/2, gamma - 1/2). With levels > 0 the interval is split into
/// panels graded geometrically (ratio 1/4) toward both endpoints, so
/// integrands with a narrow feature near t = +-1 (translating a narrow
/// function to a distant point) stay resolved.
class TranslationRule {
 public:
  TranslationRule(Order gamma, int order, int levels = 0);

  Order order() const { return gamma_; }
  int points_per_panel() const { return order_; }
  int levels() const { return levels_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  Order gamma_;
  int order_;
  int levels_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// T^x_gamma f(y).
Complex translate(const RealLineFunction& f, double x, double y, const TranslationRule& rule,
                  TranslationSign sign = TranslationSign::kCorrected);

/// y -> T^x_gamma f(y).
RealLineFunction dunkl_translate(RealLineFunction f, double x, const TranslationRule& rule,
                                 TranslationSign sign = TranslationSign::kCorrected);

/// (f *_gamma g)(x_k) = sum_j w_j T^{x_k} f(-y_j) g(y_j) |y_j|^{2g+1} on g's grid.
/// f is translated, so it must be evaluable anywhere (callable or interpolant).
SampledFunction dunkl_convolve(const RealLineFunction& f, const SampledFunction& g,
                               const TranslationRule& rule);

/// Same sum with both factors sampled on one grid; f is interpolated.
SampledFunction dunkl_convolve(const SampledFunction& f, const SampledFunction& g,
                               const TranslationRule& rule);

/// Convolution through F(f * g) = F f F g on the plan's grids.
SampledFunction dunkl_convolve_spectral(const SampledFunction& f, const SampledFunction& g,
                                        const TransformPlan& plan);

}  // namespace dunkl
