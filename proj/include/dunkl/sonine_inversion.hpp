#pragma once

#include <utility>

#include "dunkl/order.hpp"
#include "dunkl/sampled_function.hpp"
#include "dunkl/sonine.hpp"
#include "dunkl/transforms.hpp"
#include "dunkl/wavelets.hpp"

namespace dunkl {

/// Transform plans of orders alpha and beta over one pair of grids, plus the
/// quadrature for X_{alpha,beta}.
class SonineContext {
 public:
  SonineContext(SoninePair pair, GridPtr x_grid, GridPtr lambda_grid, int sonine_order = 32,
                DualOptions dual = {});

  const SoninePair& pair() const { return pair_; }
  const TransformPlan& alpha_plan() const { return alpha_; }
  const TransformPlan& beta_plan() const { return beta_; }
  const SonineRule& rule() const { return rule_; }
  const DualOptions& dual_options() const { return dual_; }
  const GridPtr& x_grid() const { return alpha_.source(); }
  const GridPtr& lambda_grid() const { return alpha_.target(); }

 private:
  SoninePair pair_;
  TransformPlan alpha_;
  TransformPlan beta_;
  SonineRule rule_;
  DualOptions dual_;
};

/// m_alpha / m_beta.
double plancherel_ratio(const SoninePair& pair);

/// F_beta(X g)(lambda) = (m_alpha/m_beta) F_alpha g(lambda) / |lambda|^{2(beta-alpha)}.
/// Requires eta > beta - 2 alpha - 1. At lambda = 0 returns the limit: 0 for
/// eta > 2(beta-alpha), ratio times the leading coefficient at equality, and
/// +inf below.
Complex sonine_image_spectrum(const WaveletSpec& g, const SoninePair& pair, double lambda);

struct DualSonineWavelet {
  WaveletSpec g;   // order alpha
  WaveletSpec xg;  // order beta, spectrum from the closed form
};

/// g = F_alpha^{-1}(profile), X g by Sonine quadrature on the x-grid, C^beta
/// from the closed-form spectrum. Requires eta > 2(beta-alpha).
DualSonineWavelet build_dual_sonine_wavelet(const SpectralProfile& profile, const SonineContext& ctx);

/// Both sides at scale a: Phi^beta_{Xg}(f)(a, .) and
/// a^{-2(beta-alpha)} X[Phi^alpha_g(tX f)(a, .)].
std::pair<SampledFunction, SampledFunction> commutation_check(const SampledFunction& f, const DualSonineWavelet& w,
                                                         double a, const SonineContext& ctx);

/// Reconstruction of f from h = tX f over the window: per scale the alpha-order
/// transform of h is carried by X to order beta and resynthesized against the
/// atoms of X g; the scale sum is formed in the beta spectrum.
SampledFunction invert_dual_sonine(const SampledFunction& h, const DualSonineWavelet& w, const CalderonWindow& window,
                                   const ScaleGrid& a_grid, const SonineContext& ctx);

/// Same terms with the b-integral inverted per scale and the scale sum taken in x.
SampledFunction invert_dual_sonine_pointwise(const SampledFunction& h, const DualSonineWavelet& w,
                                             const CalderonWindow& window, const ScaleGrid& a_grid,
                                             const SonineContext& ctx);

}  // namespace dunkl
