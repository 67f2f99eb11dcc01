#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "dunkl/order.hpp"
#include "dunkl/sampled_function.hpp"
#include "dunkl/transforms.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

/// Even real spectral profile P(lambda) ~ leading |lambda|^eta near 0.
struct SpectralProfile {
  std::string name;
  std::function<double(double)> value;
  double eta = 0.0;
  double leading = 1.0;
};

/// |lambda|^p e^{-lambda^2/2}.
SpectralProfile power_gaussian_profile(double p);

/// C = int_0^inf |F(lambda)|^2 dlambda / lambda from samples on a symmetric
/// lambda-grid split at 0. Both half-lines are integrated and must agree.
double admissibility_constant(const SampledFunction& spectrum);

class WaveletSpec {
 public:
  /// generator on the x-grid, spectrum as a callable in lambda; leading is
  /// the coefficient of |lambda|^eta near 0 when known, NaN otherwise.
  WaveletSpec(SampledFunction generator, RealLineFunction spectrum, Order gamma, double eta,
              const GridPtr& lambda_grid, double leading = std::numeric_limits<double>::quiet_NaN());

  /// g = F^{-1}(profile) on the plan's grids.
  static WaveletSpec from_profile(const SpectralProfile& profile, const TransformPlan& plan);

  Order order() const { return gamma_; }
  const SampledFunction& generator() const { return generator_; }
  Complex spectrum(double lambda) const { return spectrum_(lambda); }
  const RealLineFunction& spectrum_function() const { return spectrum_; }
  double admissibility() const { return admissibility_; }
  double decay_exponent() const { return eta_; }
  double leading_coefficient() const { return leading_; }

 private:
  SampledFunction generator_;
  RealLineFunction spectrum_;
  Order gamma_;
  double eta_;
  double leading_;
  double admissibility_;
};

class CalderonWindow {
 public:
  /// eps == delta is accepted as the degenerate empty window.
  CalderonWindow(double eps, double delta);
  double eps() const { return eps_; }
  double delta() const { return delta_; }
  bool empty() const { return eps_ == delta_; }

 private:
  double eps_;
  double delta_;
};

/// Scale nodes with weights for da/a.
class ScaleGrid {
 public:
  enum class Rule { kLogTrapezoid, kLogGauss };

  /// Uniform in log a, trapezoid weights, at least per_decade intervals per decade.
  static ScaleGrid log_uniform(double lo, double hi, int per_decade);
  /// Composite Gauss-Legendre in log a.
  static ScaleGrid log_gauss(double lo, double hi, int panels_per_decade, int order);

  /// Same rule and density over the window; the window must lie in the span.
  ScaleGrid restrict_to(const CalderonWindow& window) const;

  std::size_t size() const { return scales_.size(); }
  const std::vector<double>& scales() const { return scales_; }
  const std::vector<double>& weights() const { return weights_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  Rule rule() const { return rule_; }

 private:
  ScaleGrid(Rule rule, double lo, double hi, int density, int order);
  Rule rule_;
  double lo_;
  double hi_;
  int density_;
  int order_;
  std::vector<double> scales_;
  std::vector<double> weights_;
};

/// Phi(a, b) over scales x positions, row-major by scale.
class ScaleSpaceField {
 public:
  ScaleSpaceField(ScaleGrid scales, GridPtr b_grid);
  const ScaleGrid& scales() const { return scales_; }
  const GridPtr& b_grid() const { return b_grid_; }
  Complex at(std::size_t scale, std::size_t pos) const { return values_[scale * b_grid_->size() + pos]; }
  SampledFunction row(std::size_t scale) const;
  void set_row(std::size_t scale, const SampledFunction& f);
  /// CSV with header a,b,re,im.
  void write_csv(std::ostream& out) const;

 private:
  ScaleGrid scales_;
  GridPtr b_grid_;
  std::vector<Complex> values_;
};

/// x -> g(x/a).
RealLineFunction dilate(RealLineFunction g, double a);
/// Samples of g(x/a) on g's grid (interpolated).
SampledFunction dilate(const SampledFunction& g, double a);

/// g_{a,b}(x) = a^{-(2g+2)} T^{-b} g_a(x), evaluated by translation quadrature.
RealLineFunction wavelet_atom(const WaveletSpec& spec, double a, double b, const TranslationRule& rule);

/// Phi(a, .) = a^{-(2g+2)} f * g~_a, with g~_a(x) = conj(g(-x/a)). The
/// convolution is evaluated through the transform, where
/// F(g~_a)(lambda) = a^{2g+2} conj(F g(a lambda)).
ScaleSpaceField cwt(const SampledFunction& f, const WaveletSpec& spec, const ScaleGrid& scales,
                    const TransformPlan& plan);

/// One scale of the transform.
SampledFunction cwt_row(const SampledFunction& f, const WaveletSpec& spec, double a,
                        const TransformPlan& plan);

/// int f(x) conj(g_{a,b}(x)) |x|^{2g+1} dx with atoms from translation quadrature.
Complex cwt_inner_product(const SampledFunction& f, const WaveletSpec& spec, double a, double b,
                          const TranslationRule& rule);

/// (1/C) int_eps^delta |F g(a lambda)|^2 da/a, accurate composite rule in log a.
double calderon_K(const WaveletSpec& spec, const CalderonWindow& window, double lambda);
/// Same integral with the given scale rule.
double calderon_K(const WaveletSpec& spec, const ScaleGrid& scales, double lambda);

/// G = (1/C) int (g_a * g~_a) da / a^{4g+5} over the scale grid. Each
/// convolution is formed from the dilated x-samples of the generator by the
/// convolution theorem; the scale sum is accumulated before one inverse transform.
SampledFunction calderon_G(const WaveletSpec& spec, const ScaleGrid& scales, const TransformPlan& plan);

/// F_gamma(G) on the lambda-grid as accumulated by calderon_G, before the
/// inverse transform. Small eps gives G a component narrower than the
/// lambda-grid band resolves; f * G is formed from this spectrum so that
/// component is never resampled in x.
SampledFunction calderon_G_spectrum(const WaveletSpec& spec, const ScaleGrid& scales, const TransformPlan& plan);

/// (1/C) sum_a w_a int Phi(a,b) g_{a,b}(x) |b|^{2g+1} db, each b-integral
/// being a convolution with g_a carried out spectrally.
SampledFunction synthesize(const ScaleSpaceField& field, const WaveletSpec& spec, const TransformPlan& plan);

/// Same sum at one point with atoms from translation quadrature.
Complex synthesize_at(const ScaleSpaceField& field, const WaveletSpec& spec, double x,
                      const TranslationRule& rule);

enum class CalderonPath { kConvolution, kDoubleIntegral };

/// f^{eps,delta}; the convolution path computes f * G as
/// F^{-1}(F f . calderon_G_spectrum), the double-integral path transforms
/// and resynthesizes.
SampledFunction calderon_reconstruct(const SampledFunction& f, const WaveletSpec& spec,
                                     const CalderonWindow& window, const ScaleGrid& a_grid,
                                     const TransformPlan& plan,
                                     CalderonPath path = CalderonPath::kConvolution);

/// Reconstruction over the whole span of a_grid, which stands in for (0, inf).
SampledFunction pointwise_inverse(const SampledFunction& f, const WaveletSpec& spec,
                                  const ScaleGrid& a_grid, const TransformPlan& plan);

}  // namespace dunkl
