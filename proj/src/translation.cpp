#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {
namespace {

// u^2 = x^2 + y^2 - 2xyt without cancellation near t = +-1.
double squared_distance(double x, double y, double one_minus_t, double one_plus_t) {
  const double xy = x * y;
  if (xy >= 0.0) return (x - y) * (x - y) + 2.0 * xy * one_minus_t;
  return (x + y) * (x + y) - 2.0 * xy * one_plus_t;
}

struct EvenOdd {
  Complex even;
  Complex odd;
};

// Accumulates sum_i w_i E(u_i) and sum_i w_i O(u_i) where
// E(u) = (f(u) + f(-u))/2 and O(u) = (f(u) - f(-u))/(2u).
EvenOdd even_odd_integrals(const RealLineFunction& f, double x, double y,
                           const TranslationRule& rule) {
  const auto& t = rule.nodes();
  const auto& w = rule.weights();
  EvenOdd acc{{0.0, 0.0}, {0.0, 0.0}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double u = std::sqrt(std::max(0.0, squared_distance(x, y, 1.0 - t[i], 1.0 + t[i])));
    const Complex fp = f(u);
    const Complex fm = f(-u);
    acc.even += w[i] * 0.5 * (fp + fm);
    if (u > 0.0) acc.odd += w[i] * (fp - fm) / (2.0 * u);
  }
  return acc;
}

}  // namespace

TranslationRule::TranslationRule(Order gamma, int order, int levels)
    : gamma_(gamma), order_(order), levels_(levels) {
  if (order <= 0 || levels < 0) throw std::invalid_argument("TranslationRule: bad order or levels");
  const double g = gamma.gamma();
  // W_gamma(-t) = c (1-t)^{g+1/2} (1+t)^{g-1/2}
  const double a = g + 0.5;  // exponent at t = 1
  const double b = g - 0.5;  // exponent at t = -1
  const double c = intertwining_const(gamma);
  if (levels == 0) {
    const QuadratureRule r = gauss_jacobi(order, a, b);
    nodes_ = r.nodes;
    weights_ = r.weights;
    for (double& wi : weights_) wi *= c;
    return;
  }
  auto full_weight = [&](double t) { return c * std::pow(1.0 - t, a) * std::pow(1.0 + t, b); };
  // Left end panel [-1, -1 + d]: Jacobi in (1 + t)^b, smooth factor (1 - t)^a.
  const double d_end = 2.0 * std::pow(0.25, levels);
  {
    const QuadratureRule r = gauss_jacobi(order, 0.0, b);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const double t = -1.0 + 0.5 * d_end * (1.0 + r.nodes[i]);
      nodes_.push_back(t);
      weights_.push_back(c * std::pow(0.5 * d_end, b + 1.0) * r.weights[i] * std::pow(1.0 - t, a));
    }
  }
  const QuadratureRule gl = gauss_legendre(order);
  auto add_plain = [&](double lo, double hi) {
    const QuadratureRule r = affine_map(gl, lo, hi);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      nodes_.push_back(r.nodes[i]);
      weights_.push_back(r.weights[i] * full_weight(r.nodes[i]));
    }
  };
  for (int k = levels; k >= 2; --k) {
    add_plain(-1.0 + 2.0 * std::pow(0.25, k), -1.0 + 2.0 * std::pow(0.25, k - 1));
  }
  add_plain(-0.5, 0.5);
  for (int k = 2; k <= levels; ++k) {
    add_plain(1.0 - 2.0 * std::pow(0.25, k - 1), 1.0 - 2.0 * std::pow(0.25, k));
  }
  // Right end panel [1 - d, 1]: Jacobi in (1 - t)^a, smooth factor (1 + t)^b.
  {
    const QuadratureRule r = gauss_jacobi(order, a, 0.0);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const double t = 1.0 - 0.5 * d_end * (1.0 - r.nodes[i]);
      nodes_.push_back(t);
      weights_.push_back(c * std::pow(0.5 * d_end, a + 1.0) * r.weights[i] * std::pow(1.0 + t, b));
    }
  }
}

Complex translate(const RealLineFunction& f, double x, double y, const TranslationRule& rule,
                  TranslationSign sign) {
  if (!f) throw std::invalid_argument("translate: function is not evaluable");
  const EvenOdd eo = even_odd_integrals(f, x, y, rule);
  const double s = sign == TranslationSign::kCorrected ? x + y : x - y;
  return eo.even + s * eo.odd;
}

RealLineFunction dunkl_translate(RealLineFunction f, double x, const TranslationRule& rule,
                                 TranslationSign sign) {
  if (!f) throw std::invalid_argument("dunkl_translate: function is not evaluable");
  return [f = std::move(f), x, rule, sign](double y) { return translate(f, x, y, rule, sign); };
}

SampledFunction dunkl_convolve(const RealLineFunction& f, const SampledFunction& g,
                               const TranslationRule& rule) {
  if (!f) throw std::invalid_argument("dunkl_convolve: function is not evaluable");
  const WeightedGrid& grid = g.grid();
  if (!grid.symmetric()) throw std::invalid_argument("dunkl_convolve: symmetric grid required");
  const double e = rule.order().weight_exponent();
  const std::size_t n = grid.size();
  std::vector<double> c(n);
  double cmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = grid.weight(j) * std::pow(std::abs(grid.node(j)), e);
    cmax = std::max(cmax, c[j] * std::abs(g.value(j)));
  }
  // Pairs whose weighted samples are this far below the largest one cannot
  // affect the result at double precision and are skipped.
  const double skip = 1e-20 * cmax;
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  const long half = static_cast<long>(n / 2);
#pragma omp parallel for schedule(dynamic, 4)
  for (long kk = 0; kk < half + static_cast<long>(n % 2); ++kk) {
    const std::size_t k = n - 1 - static_cast<std::size_t>(kk);  // x_k >= 0
    const double x = grid.node(k);
    Complex plus{0.0, 0.0};
    Complex minus{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jm = grid.mirror(j);
      const Complex gp = c[j] * g.value(j);
      const Complex gm = c[j] * g.value(jm);
      if (std::abs(gp) <= skip && std::abs(gm) <= skip) continue;
      const double y = grid.node(j);
      // T^x f(-y) and T^{-x} f(y) share u; the odd coefficient flips sign.
      const EvenOdd eo = even_odd_integrals(f, x, -y, rule);
      const double s = x - y;
      plus += gp * (eo.even + s * eo.odd);
      minus += gm * (eo.even - s * eo.odd);
    }
    out[k] = plus;
    if (x != 0.0) out[grid.mirror(k)] = minus;
  }
  return SampledFunction(g.grid_ptr(), std::move(out));
}

SampledFunction dunkl_convolve(const SampledFunction& f, const SampledFunction& g,
                               const TranslationRule& rule) {
  require_same_grid(f.grid(), g.grid(), "dunkl_convolve");
  return dunkl_convolve(f.as_function(), g, rule);
}

SampledFunction dunkl_convolve_spectral(const SampledFunction& f, const SampledFunction& g,
                                        const TransformPlan& plan) {
  SampledFunction ff = plan.forward(f);
  const SampledFunction fg = plan.forward(g);
  std::vector<Complex> prod(ff.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ff.value(i) * fg.value(i);
  return plan.inverse(SampledFunction(plan.target(), std::move(prod)));
}

}  // namespace dunkl
