#pragma once

#include <stdexcept>

namespace dunkl {

/// Dunkl parameter gamma > -1/2.
class Order {
 public:
  explicit Order(double gamma) : gamma_(gamma) {
    if (!(gamma > -0.5)) {
      throw std::invalid_argument("Order: gamma must exceed -1/2");
    }
  }
  double gamma() const { return gamma_; }
  /// Exponent 2*gamma + 1 of the weight |x|^{2 gamma + 1}.
  double weight_exponent() const { return 2.0 * gamma_ + 1.0; }

 private:
  double gamma_;
};

class SoninePair {
 public:
  SoninePair(Order alpha, Order beta) : alpha_(alpha), beta_(beta) {
    if (!(beta.gamma() > alpha.gamma())) {
      throw std::invalid_argument("SoninePair: beta must exceed alpha");
    }
  }
  SoninePair(double alpha, double beta) : SoninePair(Order(alpha), Order(beta)) {}

  Order alpha() const { return alpha_; }
  Order beta() const { return beta_; }
  /// beta - alpha - 1, the exponent of (x^2 - y^2) in the kernel.
  double kernel_exponent() const { return beta_.gamma() - alpha_.gamma() - 1.0; }

 private:
  Order alpha_;
  Order beta_;
};

}  // namespace dunkl
