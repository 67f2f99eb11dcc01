#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dunkl/order.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

using Complex = std::complex<double>;
using RealLineFunction = std::function<Complex(double)>;

/// Complex samples of a function on a grid. Off-grid evaluation uses
/// barycentric interpolation within each panel and returns 0 beyond R,
/// where every function handled here is taken to vanish.
class SampledFunction {
 public:
  SampledFunction(GridPtr grid, std::vector<Complex> values,
                  std::optional<std::vector<Complex>> derivative = std::nullopt);

  const WeightedGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  Complex value(std::size_t i) const { return values_[i]; }
  bool has_derivative() const { return derivative_.has_value(); }
  std::span<const Complex> derivative() const;

  /// Interpolated value; composite grids only.
  Complex operator()(double x) const;
  /// Callable sharing this function's samples.
  RealLineFunction as_function() const;

  SampledFunction with_derivative(std::vector<Complex> derivative) const;

  SampledFunction& operator+=(const SampledFunction& other);
  SampledFunction& operator-=(const SampledFunction& other);
  SampledFunction& operator*=(Complex scale);

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
  std::optional<std::vector<Complex>> derivative_;
};

SampledFunction operator+(SampledFunction a, const SampledFunction& b);
SampledFunction operator-(SampledFunction a, const SampledFunction& b);
SampledFunction operator*(Complex scale, SampledFunction a);

SampledFunction sample(const RealLineFunction& f, GridPtr grid);
SampledFunction sample(const RealLineFunction& f, const RealLineFunction& df, GridPtr grid);
SampledFunction zero_function(GridPtr grid);

/// Pointwise map of values.
SampledFunction transform_values(const SampledFunction& f, const std::function<Complex(double, Complex)>& op);

/// Sum_k w_k f(x_k) |x_k|^{2 gamma + 1}, compensated, ascending node order.
Complex integrate_weighted(const SampledFunction& f, Order gamma);

/// Weighted L^p norm for p in {1, 2, infinity}.
double lp_norm(const SampledFunction& f, double p, Order gamma);

/// ||a - b||_{2,gamma} / ||b||_{2,gamma}.
double relative_l2_error(const SampledFunction& a, const SampledFunction& b, Order gamma);

/// Same, restricted to nodes with |x| <= limit.
double relative_l2_error(const SampledFunction& a, const SampledFunction& b, Order gamma, double limit);

/// max |a - b| over nodes with |x| <= limit.
double max_abs_error(const SampledFunction& a, const SampledFunction& b, double limit);

/// Attaches derivative samples obtained by differentiating the panel interpolants.
SampledFunction differentiate(const SampledFunction& f);

void require_same_grid(const WeightedGrid& a, const WeightedGrid& b, const char* what);

}  // namespace dunkl
