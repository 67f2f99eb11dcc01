#pragma once

#include <memory>

#include "dunkl/order.hpp"
#include "dunkl/sampled_function.hpp"

namespace dunkl {

/// Pairs an x-grid and a lambda-grid for F_gamma. The kernel values
/// j_g(lambda x) and lambda x j_{g+1}(lambda x) / (2(g+1)) are cached for
/// positive nodes only; the sign structure of e_gamma supplies the rest.
class TransformPlan {
 public:
  TransformPlan(GridPtr source, GridPtr target, Order gamma);
  /// lambda-grid equal to the x-grid.
  static TransformPlan self_dual(GridPtr grid, Order gamma) { return TransformPlan(grid, grid, gamma); }

  const GridPtr& source() const { return source_; }
  const GridPtr& target() const { return target_; }
  Order order() const { return gamma_; }

  SampledFunction forward(const SampledFunction& f) const;
  SampledFunction inverse(const SampledFunction& F) const;

  struct Kernel;

 private:
  GridPtr source_;
  GridPtr target_;
  Order gamma_;
  std::shared_ptr<const Kernel> kernel_;
};

/// F_gamma f on the plan's lambda-grid.
SampledFunction dunkl_transform(const SampledFunction& f, const TransformPlan& plan);

/// m_gamma * sum_j w_j F(lambda_j) e_gamma(i lambda_j x) |lambda_j|^{2g+1}.
SampledFunction inverse_dunkl_transform(const SampledFunction& F, const TransformPlan& plan);

/// Lambda_gamma f from values and derivative samples on a symmetric grid.
SampledFunction dunkl_operator(const SampledFunction& f, Order gamma);

}  // namespace dunkl
