#pragma once

#include <complex>

#include "dunkl/order.hpp"

namespace dunkl {

/// Arguments up to this magnitude use the power series; larger ones use
/// closed forms (half-integer orders) or Boost.Math.
inline constexpr double kBesselSeriesLimit = 8.0;

struct SeriesResult {
  double value;
  double last_term;  // first omitted-order term, relative to the sum's scale
  int terms;
};

/// Normalized Bessel function j_g(z) = Gamma(g+1) (2/z)^g J_g(z), g > -1.
double bessel_j(double g, double z);

/// Kahan-summed power series for j_g; accurate for |z| <= kBesselSeriesLimit.
SeriesResult bessel_j_series(double g, double z);

/// e_gamma(i lambda x) = j_g(lambda x) + i lambda x / (2(g+1)) j_{g+1}(lambda x).
std::complex<double> dunkl_kernel(Order gamma, double lambda, double x);

/// d/dx e_gamma(i lambda x).
std::complex<double> dunkl_kernel_derivative(Order gamma, double lambda, double x);

/// W_gamma(t) on (-1, 1).
double translation_weight(Order gamma, double t);

/// Gamma(g+1) / (sqrt(pi) Gamma(g+1/2)).
double intertwining_const(Order gamma);

/// K_{alpha,beta}(x, y); x must be nonzero.
double sonine_kernel(const SoninePair& pair, double x, double y);

/// a_{alpha,beta} = Gamma(beta+1) / (Gamma(alpha+1) Gamma(beta-alpha)).
double sonine_const(const SoninePair& pair);

/// m_gamma = 1 / (2^{2g+2} Gamma(g+1)^2).
double plancherel_const(Order gamma);

}  // namespace dunkl
