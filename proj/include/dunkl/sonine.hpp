#pragma once

#include <vector>

#include "dunkl/order.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/sampled_function.hpp"

namespace dunkl {

/// Quadrature for X_{alpha,beta} after y = x t and u = t^2: a Gauss-Jacobi
/// rule on (0,1) for (1-u)^{beta-alpha-1} u^alpha, stored as t = sqrt(u)
/// with a_{alpha,beta}/2 folded into the weights.
/// For |x| > span the t-interval is cut into ceil(|x|/span) equal panels so
/// each covers at most span units of y: Jacobi in t^{2 alpha + 1} on the
/// first, Jacobi in (1-t)^{beta-alpha-1} on the last, Legendre between.
class SonineRule {
 public:
  SonineRule(const SoninePair& pair, int order, double span = 8.0);
  const SoninePair& pair() const { return pair_; }
  int order() const { return static_cast<int>(t_.size()); }
  double span() const { return span_; }
  const std::vector<double>& t() const { return t_; }
  const std::vector<double>& weights() const { return w_; }

  /// Nodes in t and weights (a_{alpha,beta} and the kernel weight folded in) for this x.
  void nodes_for(double x, std::vector<double>& t, std::vector<double>& w) const;

 private:
  SoninePair pair_;
  double span_;
  std::vector<double> t_;
  std::vector<double> w_;
  QuadratureRule first_;
  QuadratureRule interior_;
  QuadratureRule last_;
};

/// X_{alpha,beta} f(x); returns f(0) at x = 0.
Complex sonine_at(const RealLineFunction& f, double x, const SonineRule& rule);

SampledFunction sonine_transform(const RealLineFunction& f, GridPtr x_grid, const SonineRule& rule);

struct DualOptions {
  double radius = 0.0;          // truncation radius; 0 means the output grid's radius
  double panel_width = 0.5;     // panel width of the composite rule in w
  int order = 16;               // points per panel
  double tail_tolerance = 1e-12;
};

/// tX_{alpha,beta} f(y) = int_{|x|>=|y|} K(x,y) f(x) |x|^{2beta+1} dx.
/// With x^2 = y^2 + w^2 the integral becomes
/// 2 a int_0^inf w^{2(beta-alpha)-1} [E(y^2+w^2) + y O(y^2+w^2)] dw,
/// E and O the even part and odd part over x of f, which is smooth in w; the
/// first panel carries the w-power as a Jacobi weight.
SampledFunction dual_sonine_transform(const RealLineFunction& f, const SoninePair& pair,
                                      GridPtr y_grid, const DualOptions& opts = {});

/// tV_gamma f(y) = c_gamma int_{|x|>=|y|} sgn(x)(x+y)(x^2-y^2)^{gamma-1/2} f(x) dx,
/// same machinery with exponent gamma - 1/2.
SampledFunction dual_intertwining_V(const RealLineFunction& f, Order gamma, GridPtr y_grid,
                                    const DualOptions& opts = {});

}  // namespace dunkl
