#include "dunkl/transforms.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

namespace dunkl {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct HalfIndex {
  std::vector<std::size_t> positive;  // ascending
  std::size_t zero = kNone;
};

HalfIndex half_index(const WeightedGrid& grid) {
  HalfIndex h;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.node(i) > 0.0) h.positive.push_back(i);
    if (grid.node(i) == 0.0) h.zero = i;
  }
  return h;
}

}  // namespace

struct TransformPlan::Kernel {
  HalfIndex src;
  HalfIndex tgt;
  Eigen::MatrixXd even;  // j_g(lambda x)
  Eigen::MatrixXd odd;   // lambda x / (2(g+1)) j_{g+1}(lambda x)
};

TransformPlan::TransformPlan(GridPtr source, GridPtr target, Order gamma)
    : source_(std::move(source)), target_(std::move(target)), gamma_(gamma) {
  if (!source_ || !target_) throw std::invalid_argument("TransformPlan: null grid");
  if (!source_->symmetric() || !target_->symmetric()) {
    throw std::invalid_argument("TransformPlan: both grids must be symmetric");
  }
  auto k = std::make_shared<Kernel>();
  k->src = half_index(*source_);
  k->tgt = half_index(*target_);
  const std::size_t nt = k->tgt.positive.size();
  const std::size_t ns = k->src.positive.size();
  k->even.resize(nt, ns);
  k->odd.resize(nt, ns);
  const double g = gamma_.gamma();
  const bool same = source_->same_nodes(*target_, 0.0);
  const long rows = static_cast<long>(nt);
#pragma omp parallel for schedule(dynamic, 8)
  for (long j = 0; j < rows; ++j) {
    const double lambda = target_->node(k->tgt.positive[j]);
    const std::size_t start = same ? static_cast<std::size_t>(j) : 0;
    for (std::size_t i = start; i < ns; ++i) {
      const double z = lambda * source_->node(k->src.positive[i]);
      k->even(j, i) = bessel_j(g, z);
      k->odd(j, i) = z / (2.0 * (g + 1.0)) * bessel_j(g + 1.0, z);
    }
  }
  if (same) {
    for (std::size_t j = 0; j < nt; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        k->even(j, i) = k->even(i, j);
        k->odd(j, i) = k->odd(i, j);
      }
    }
  }
  kernel_ = std::move(k);
}

SampledFunction TransformPlan::forward(const SampledFunction& f) const {
  require_same_grid(f.grid(), *source_, "dunkl_transform");
  const Kernel& k = *kernel_;
  const WeightedGrid& xs = *source_;
  const double e = gamma_.weight_exponent();
  const std::size_t ns = k.src.positive.size();
  Eigen::VectorXd er(ns), ei(ns), dr(ns), di(ns);
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < ns; ++i) {
    const std::size_t p = k.src.positive[i];
    const std::size_t m = xs.mirror(p);
    const double u = xs.weight(p) * std::pow(xs.node(p), e);
    const Complex s = u * (f.value(p) + f.value(m));
    const Complex d = u * (f.value(p) - f.value(m));
    er(i) = s.real();
    ei(i) = s.imag();
    dr(i) = d.real();
    di(i) = d.imag();
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    total += xs.weight(i) * std::pow(std::abs(xs.node(i)), e) * f.value(i);
  }
  const Eigen::VectorXd ar = k.even * er;
  const Eigen::VectorXd ai = k.even * ei;
  const Eigen::VectorXd br = k.odd * dr;
  const Eigen::VectorXd bi = k.odd * di;
  const WeightedGrid& ls = *target_;
  std::vector<Complex> out(ls.size());
  for (std::size_t j = 0; j < k.tgt.positive.size(); ++j) {
    const std::size_t p = k.tgt.positive[j];
    out[p] = Complex(ar(j) + bi(j), ai(j) - br(j));
    out[ls.mirror(p)] = Complex(ar(j) - bi(j), ai(j) + br(j));
  }
  if (k.tgt.zero != kNone) out[k.tgt.zero] = total;
  return SampledFunction(target_, std::move(out));
}

SampledFunction TransformPlan::inverse(const SampledFunction& F) const {
  require_same_grid(F.grid(), *target_, "inverse_dunkl_transform");
  const Kernel& k = *kernel_;
  const WeightedGrid& ls = *target_;
  const double e = gamma_.weight_exponent();
  const double m = plancherel_const(gamma_);
  const std::size_t nt = k.tgt.positive.size();
  Eigen::VectorXd er(nt), ei(nt), dr(nt), di(nt);
  Complex total{0.0, 0.0};
  for (std::size_t j = 0; j < nt; ++j) {
    const std::size_t p = k.tgt.positive[j];
    const std::size_t q = ls.mirror(p);
    const double v = ls.weight(p) * std::pow(ls.node(p), e);
    const Complex s = v * (F.value(p) + F.value(q));
    const Complex d = v * (F.value(p) - F.value(q));
    er(j) = s.real();
    ei(j) = s.imag();
    dr(j) = d.real();
    di(j) = d.imag();
  }
  for (std::size_t j = 0; j < ls.size(); ++j) {
    total += ls.weight(j) * std::pow(std::abs(ls.node(j)), e) * F.value(j);
  }
  const Eigen::VectorXd ar = k.even.transpose() * er;
  const Eigen::VectorXd ai = k.even.transpose() * ei;
  const Eigen::VectorXd br = k.odd.transpose() * dr;
  const Eigen::VectorXd bi = k.odd.transpose() * di;
  const WeightedGrid& xs = *source_;
  std::vector<Complex> out(xs.size());
  for (std::size_t i = 0; i < k.src.positive.size(); ++i) {
    const std::size_t p = k.src.positive[i];
    // f(x) = m (A + iB), f(-x) = m (A - iB)
    out[p] = m * Complex(ar(i) - bi(i), ai(i) + br(i));
    out[xs.mirror(p)] = m * Complex(ar(i) + bi(i), ai(i) - br(i));
  }
  if (k.src.zero != kNone) out[k.src.zero] = m * total;
  return SampledFunction(source_, std::move(out));
}

SampledFunction dunkl_transform(const SampledFunction& f, const TransformPlan& plan) {
  return plan.forward(f);
}

SampledFunction inverse_dunkl_transform(const SampledFunction& F, const TransformPlan& plan) {
  return plan.inverse(F);
}

SampledFunction dunkl_operator(const SampledFunction& f, Order gamma) {
  if (!f.has_derivative()) throw std::invalid_argument("dunkl_operator: derivative samples required");
  const WeightedGrid& grid = f.grid();
  if (!grid.symmetric()) throw std::invalid_argument("dunkl_operator: symmetric grid required");
  const auto d = f.derivative();
  const double c = gamma.gamma() + 0.5;
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = grid.node(i);
    if (x == 0.0) {
      out[i] = d[i] + 2.0 * c * d[i];
    } else {
      out[i] = d[i] + c * (f.value(i) - f.value(grid.mirror(i))) / x;
    }
  }
  return SampledFunction(f.grid_ptr(), std::move(out));
}

}  // namespace dunkl
