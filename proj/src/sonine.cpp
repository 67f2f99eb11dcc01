#include "dunkl/sonine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {
namespace {

// 2 * scale * int_0^W w^p [E + y O] dw for one output point.
class DualIntegrator {
 public:
  DualIntegrator(double p, double scale, const DualOptions& opts)
      : p_(p),
        scale_(scale),
        opts_(opts),
        jacobi_(gauss_jacobi(opts.order, 0.0, p)),
        legendre_(gauss_legendre(opts.order)) {}

  Complex operator()(const RealLineFunction& f, double y, double radius) const {
    if (std::abs(y) >= radius) return {0.0, 0.0};
    const double wmax = std::sqrt((radius - std::abs(y)) * (radius + std::abs(y)));
    const double h = opts_.panel_width;
    Complex acc{0.0, 0.0};
    const double h1 = std::min(h, wmax);
    for (std::size_t i = 0; i < jacobi_.nodes.size(); ++i) {
      const double w = 0.5 * h1 * (1.0 + jacobi_.nodes[i]);
      acc += std::pow(0.5 * h1, p_ + 1.0) * jacobi_.weights[i] * integrand(f, y, w);
    }
    for (double lo = h1; lo < wmax; lo += h) {
      const double hi = std::min(lo + h, wmax);
      const double half = 0.5 * (hi - lo);
      for (std::size_t i = 0; i < legendre_.nodes.size(); ++i) {
        const double w = lo + half * (1.0 + legendre_.nodes[i]);
        acc += half * legendre_.weights[i] * std::pow(w, p_) * integrand(f, y, w);
      }
    }
    return 2.0 * scale_ * acc;
  }

 private:
  static Complex integrand(const RealLineFunction& f, double y, double w) {
    const double s = std::hypot(y, w);
    const Complex fp = f(s);
    const Complex fm = f(-s);
    return 0.5 * (fp + fm) + y * (fp - fm) / (2.0 * s);
  }

  double p_;
  double scale_;
  DualOptions opts_;
  QuadratureRule jacobi_;
  QuadratureRule legendre_;
};

void check_decay(const RealLineFunction& f, double radius, double power, double tol) {
  const double tail = std::max(std::abs(f(radius)), std::abs(f(-radius))) * std::pow(radius, power);
  if (!(tail < tol)) {
    throw DecayError("insufficient decay: |f(R)| R^" + std::to_string(power) + " = " +
                     std::to_string(tail) + " at R = " + std::to_string(radius));
  }
}

SampledFunction dual_integral(const RealLineFunction& f, double exponent, double scale,
                              double tail_power, const GridPtr& y_grid, const DualOptions& opts) {
  if (!f) throw std::invalid_argument("dual transform: function is not evaluable");
  if (opts.order <= 0 || !(opts.panel_width > 0.0)) {
    throw std::invalid_argument("dual transform: bad quadrature options");
  }
  const double radius = opts.radius > 0.0 ? opts.radius : y_grid->radius();
  check_decay(f, radius, tail_power, opts.tail_tolerance);
  const DualIntegrator integrate(2.0 * exponent + 1.0, scale, opts);
  std::vector<Complex> out(y_grid->size());
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) out[i] = integrate(f, y_grid->node(i), radius);
  return SampledFunction(y_grid, std::move(out));
}

}  // namespace

SonineRule::SonineRule(const SoninePair& pair, int order, double span)
    : pair_(pair), span_(span) {
  if (order <= 0) throw std::invalid_argument("SonineRule: order must be positive");
  if (!(span > 0.0)) throw std::invalid_argument("SonineRule: span must be positive");
  const double c = pair.kernel_exponent();
  const double a = pair.alpha().gamma();
  const QuadratureRule r = gauss_jacobi(order, c, a);
  const double scale = 0.5 * sonine_const(pair) * std::pow(2.0, -c - a - 1.0);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    t_.push_back(std::sqrt(0.5 * (1.0 + r.nodes[i])));
    w_.push_back(scale * r.weights[i]);
  }
  first_ = gauss_jacobi(order, 0.0, 2.0 * a + 1.0);
  interior_ = gauss_legendre(order);
  last_ = gauss_jacobi(order, c, 0.0);
}

void SonineRule::nodes_for(double x, std::vector<double>& t, std::vector<double>& w) const {
  t.clear();
  w.clear();
  const double ax = std::abs(x);
  if (ax <= span_) {
    t = t_;
    w = w_;
    return;
  }
  // a int_0^1 (1-t^2)^c t^{2 alpha + 1} [...] dt
  const double c = pair_.kernel_exponent();
  const double p = 2.0 * pair_.alpha().gamma() + 1.0;
  const double k = sonine_const(pair_);
  const int m = static_cast<int>(std::ceil(ax / span_));
  const double h = 1.0 / m;
  const double half = 0.5 * h;
  for (std::size_t i = 0; i < first_.nodes.size(); ++i) {
    const double ti = half * (1.0 + first_.nodes[i]);
    t.push_back(ti);
    w.push_back(k * std::pow(half, p + 1.0) * first_.weights[i] * std::pow(1.0 - ti * ti, c));
  }
  for (int j = 1; j + 1 < m; ++j) {
    for (std::size_t i = 0; i < interior_.nodes.size(); ++i) {
      const double ti = (j + 0.5 * (1.0 + interior_.nodes[i])) * h;
      t.push_back(ti);
      w.push_back(k * half * interior_.weights[i] * std::pow(1.0 - ti * ti, c) * std::pow(ti, p));
    }
  }
  for (std::size_t i = 0; i < last_.nodes.size(); ++i) {
    const double ti = 1.0 - half * (1.0 - last_.nodes[i]);
    t.push_back(ti);
    w.push_back(k * std::pow(half, c + 1.0) * last_.weights[i] * std::pow(1.0 + ti, c) * std::pow(ti, p));
  }
}

Complex sonine_at(const RealLineFunction& f, double x, const SonineRule& rule) {
  if (!f) throw std::invalid_argument("sonine_transform: function is not evaluable");
  if (x == 0.0) return f(0.0);
  const double s = x > 0.0 ? 1.0 : -1.0;
  const double ax = std::abs(x);
  thread_local std::vector<double> t;
  thread_local std::vector<double> w;
  rule.nodes_for(x, t, w);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < t.size(); ++i) {
    acc += w[i] * ((1.0 + s * t[i]) * f(ax * t[i]) + (1.0 - s * t[i]) * f(-ax * t[i]));
  }
  return acc;
}

SampledFunction sonine_transform(const RealLineFunction& f, GridPtr x_grid, const SonineRule& rule) {
  if (!f) throw std::invalid_argument("sonine_transform: function is not evaluable");
  std::vector<Complex> out(x_grid->size());
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = sonine_at(f, x_grid->node(i), rule);
  return SampledFunction(std::move(x_grid), std::move(out));
}

SampledFunction dual_sonine_transform(const RealLineFunction& f, const SoninePair& pair,
                                      GridPtr y_grid, const DualOptions& opts) {
  return dual_integral(f, pair.kernel_exponent(), sonine_const(pair),
                       2.0 * pair.beta().gamma() + 2.0, y_grid, opts);
}

SampledFunction dual_intertwining_V(const RealLineFunction& f, Order gamma, GridPtr y_grid,
                                    const DualOptions& opts) {
  return dual_integral(f, gamma.gamma() - 0.5, intertwining_const(gamma),
                       2.0 * gamma.gamma() + 1.0, y_grid, opts);
}

}  // namespace dunkl
