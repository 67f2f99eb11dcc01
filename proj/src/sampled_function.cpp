#include "dunkl/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Complex interpolate(const WeightedGrid& grid, std::span<const Complex> values, double x) {
  if (grid.kind() != RuleKind::kCompositeLegendre) {
    throw std::invalid_argument("interpolation requires a composite grid");
  }
  const double r = grid.radius();
  if (!(std::abs(x) <= r)) return {0.0, 0.0};
  const double h = grid.panel_width();
  const int panels = grid.panels();
  const int order = grid.order();
  int p = static_cast<int>(std::floor((x + r) / h));
  p = std::clamp(p, 0, panels - 1);
  const double xi = (x - (-r + (p + 0.5) * h)) / (0.5 * h);
  const auto ref = grid.reference_nodes();
  const auto bary = grid.barycentric_weights();
  const std::size_t base = static_cast<std::size_t>(p) * order;
  Complex num{0.0, 0.0};
  double den = 0.0;
  for (int j = 0; j < order; ++j) {
    const double d = xi - ref[j];
    if (d == 0.0) return values[base + j];
    const double c = bary[j] / d;
    num += c * values[base + j];
    den += c;
  }
  return num / den;
}

}  // namespace

void require_same_grid(const WeightedGrid& a, const WeightedGrid& b, const char* what) {
  if (!a.same_nodes(b)) throw GridMismatch(std::string(what) + ": grid mismatch");
}

SampledFunction::SampledFunction(GridPtr grid, std::vector<Complex> values,
                                 std::optional<std::vector<Complex>> derivative)
    : grid_(std::move(grid)), values_(std::move(values)), derivative_(std::move(derivative)) {
  if (!grid_) throw std::invalid_argument("SampledFunction: null grid");
  if (values_.size() != grid_->size()) {
    throw std::invalid_argument("SampledFunction: value count differs from node count");
  }
  if (derivative_ && derivative_->size() != grid_->size()) {
    throw std::invalid_argument("SampledFunction: derivative count differs from node count");
  }
}

std::span<const Complex> SampledFunction::derivative() const {
  if (!derivative_) throw std::invalid_argument("SampledFunction: no derivative samples");
  return *derivative_;
}

Complex SampledFunction::operator()(double x) const { return interpolate(*grid_, values_, x); }

RealLineFunction SampledFunction::as_function() const {
  auto self = std::make_shared<const SampledFunction>(*this);
  return [self](double x) { return (*self)(x); };
}

SampledFunction SampledFunction::with_derivative(std::vector<Complex> derivative) const {
  return SampledFunction(grid_, values_, std::move(derivative));
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
  require_same_grid(*grid_, other.grid(), "SampledFunction +");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  derivative_.reset();
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other) {
  require_same_grid(*grid_, other.grid(), "SampledFunction -");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  derivative_.reset();
  return *this;
}

SampledFunction& SampledFunction::operator*=(Complex scale) {
  for (Complex& v : values_) v *= scale;
  if (derivative_) {
    for (Complex& v : *derivative_) v *= scale;
  }
  return *this;
}

SampledFunction operator+(SampledFunction a, const SampledFunction& b) { return a += b; }
SampledFunction operator-(SampledFunction a, const SampledFunction& b) { return a -= b; }
SampledFunction operator*(Complex scale, SampledFunction a) { return a *= scale; }

SampledFunction sample(const RealLineFunction& f, GridPtr grid) {
  std::vector<Complex> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(grid->node(i));
  return SampledFunction(std::move(grid), std::move(values));
}

SampledFunction sample(const RealLineFunction& f, const RealLineFunction& df, GridPtr grid) {
  std::vector<Complex> values(grid->size());
  std::vector<Complex> deriv(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f(grid->node(i));
    deriv[i] = df(grid->node(i));
  }
  return SampledFunction(std::move(grid), std::move(values), std::move(deriv));
}

SampledFunction zero_function(GridPtr grid) {
  std::vector<Complex> values(grid->size(), Complex{0.0, 0.0});
  return SampledFunction(std::move(grid), std::move(values));
}

SampledFunction transform_values(const SampledFunction& f,
                                 const std::function<Complex(double, Complex)>& op) {
  std::vector<Complex> values(f.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = op(f.grid().node(i), f.value(i));
  return SampledFunction(f.grid_ptr(), std::move(values));
}

Complex integrate_weighted(const SampledFunction& f, Order gamma) {
  const WeightedGrid& grid = f.grid();
  const double e = gamma.weight_exponent();
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = grid.weight(k) * std::pow(std::abs(grid.node(k)), e);
    re.add(w * f.value(k).real());
    im.add(w * f.value(k).imag());
  }
  return {re.value(), im.value()};
}

double lp_norm(const SampledFunction& f, double p, Order gamma) {
  const WeightedGrid& grid = f.grid();
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (const Complex& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (p != 1.0 && p != 2.0) throw std::invalid_argument("lp_norm: p must be 1, 2 or infinity");
  const double e = gamma.weight_exponent();
  CompensatedSum s;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double a = std::abs(f.value(k));
    s.add(grid.weight(k) * std::pow(std::abs(grid.node(k)), e) * (p == 1.0 ? a : a * a));
  }
  return p == 1.0 ? s.value() : std::sqrt(s.value());
}

double relative_l2_error(const SampledFunction& a, const SampledFunction& b, Order gamma) {
  return relative_l2_error(a, b, gamma, std::numeric_limits<double>::infinity());
}

double relative_l2_error(const SampledFunction& a, const SampledFunction& b, Order gamma,
                         double limit) {
  require_same_grid(a.grid(), b.grid(), "relative_l2_error");
  const WeightedGrid& grid = a.grid();
  const double e = gamma.weight_exponent();
  CompensatedSum num;
  CompensatedSum den;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::abs(grid.node(k)) > limit) continue;
    const double w = grid.weight(k) * std::pow(std::abs(grid.node(k)), e);
    num.add(w * std::norm(a.value(k) - b.value(k)));
    den.add(w * std::norm(b.value(k)));
  }
  if (den.value() == 0.0) return num.value() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num.value() / den.value());
}

double max_abs_error(const SampledFunction& a, const SampledFunction& b, double limit) {
  require_same_grid(a.grid(), b.grid(), "max_abs_error");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a.grid().node(k)) <= limit) m = std::max(m, std::abs(a.value(k) - b.value(k)));
  }
  return m;
}

SampledFunction differentiate(const SampledFunction& f) {
  const WeightedGrid& grid = f.grid();
  if (grid.kind() != RuleKind::kCompositeLegendre) {
    throw std::invalid_argument("differentiate: composite grid required");
  }
  const int n = grid.order();
  const auto ref = grid.reference_nodes();
  const auto bary = grid.barycentric_weights();
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double diag = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      const double v = (bary[k] / bary[j]) / (ref[j] - ref[k]);
      d[j * n + k] = v;
      diag -= v;
    }
    d[j * n + j] = diag;
  }
  const double scale = 2.0 / grid.panel_width();
  std::vector<Complex> deriv(f.size());
  for (int p = 0; p < grid.panels(); ++p) {
    const std::size_t base = static_cast<std::size_t>(p) * n;
    for (int j = 0; j < n; ++j) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k) s += d[j * n + k] * f.value(base + k);
      deriv[base + j] = scale * s;
    }
  }
  return SampledFunction(f.grid_ptr(), std::vector<Complex>(f.values().begin(), f.values().end()),
                         std::move(deriv));
}

}  // namespace dunkl
