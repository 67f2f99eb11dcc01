#include "dunkl/kernels.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {
namespace {

constexpr double kPi = std::numbers::pi;

void check_bessel_order(double g) {
  if (!(g > -1.0) || !std::isfinite(g)) {
    throw std::invalid_argument("bessel_j: order must exceed -1");
  }
}

// Returns n when g = n + 1/2 for an integer n >= -1, else -2.
int half_integer_index(double g) {
  const double n = std::round(g - 0.5);
  if (n >= -1.0 && std::abs(g - 0.5 - n) < 1e-14) return static_cast<int>(n);
  return -2;
}

// j_{n+1/2}(z) from spherical Bessel functions by upward recurrence, z > n.
double half_integer_bessel(int n, double z) {
  const double s = std::sin(z);
  const double c = std::cos(z);
  double prev = c / z;  // spherical j_{-1}
  double cur = s / z;   // spherical j_0
  if (n == -1) return c;
  for (int k = 0; k < n; ++k) {
    const double next = (2.0 * k + 1.0) / z * cur - prev;
    prev = cur;
    cur = next;
  }
  // Gamma(n + 3/2) 2^{n+1} / sqrt(pi) / z^n
  const double scale = std::tgamma(n + 1.5) * std::pow(2.0, n + 1) / std::sqrt(kPi);
  return scale * cur / std::pow(z, n);
}

}  // namespace

SeriesResult bessel_j_series(double g, double z) {
  check_bessel_order(g);
  if (!std::isfinite(z)) throw std::invalid_argument("bessel_j: non-finite argument");
  const double q = 0.25 * z * z;
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  int n = 0;
  for (n = 1; n < 400; ++n) {
    term *= -q / (n * (n + g));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (n > q && std::abs(term) <= 1e-17 * std::abs(sum)) break;
    if (std::abs(term) < 1e-300) break;
  }
  const double next = term * (-q / ((n + 1) * (n + 1 + g)));
  const double scale = std::abs(sum) > 0.0 ? std::abs(sum) : 1.0;
  return {sum, std::abs(next) / scale, n + 1};
}

double bessel_j(double g, double z) {
  check_bessel_order(g);
  if (!std::isfinite(z)) throw std::invalid_argument("bessel_j: non-finite argument");
  z = std::abs(z);
  if (z <= kBesselSeriesLimit) return bessel_j_series(g, z).value;
  const int n = half_integer_index(g);
  if (n >= -1 && n < z) return half_integer_bessel(n, z);
  return std::tgamma(g + 1.0) * std::pow(2.0 / z, g) * boost::math::cyl_bessel_j(g, z);
}

std::complex<double> dunkl_kernel(Order gamma, double lambda, double x) {
  const double g = gamma.gamma();
  const double z = lambda * x;
  if (z == 0.0) return {1.0, 0.0};
  return {bessel_j(g, z), z / (2.0 * (g + 1.0)) * bessel_j(g + 1.0, z)};
}

std::complex<double> dunkl_kernel_derivative(Order gamma, double lambda, double x) {
  const double g = gamma.gamma();
  const double z = lambda * x;
  const double j1 = bessel_j(g + 1.0, z);
  const double j2 = bessel_j(g + 2.0, z);
  const double c = 1.0 / (2.0 * (g + 1.0));
  return lambda * std::complex<double>(-z * c * j1, c * (j1 - z * z / (2.0 * (g + 2.0)) * j2));
}

double intertwining_const(Order gamma) {
  const double g = gamma.gamma();
  return std::exp(std::lgamma(g + 1.0) - std::lgamma(g + 0.5)) / std::sqrt(kPi);
}

double translation_weight(Order gamma, double t) {
  if (!(std::abs(t) < 1.0)) {
    throw std::invalid_argument("translation_weight: |t| must be below 1");
  }
  const double g = gamma.gamma();
  return intertwining_const(gamma) * (1.0 + t) * std::pow(1.0 - t * t, g - 0.5);
}

double sonine_const(const SoninePair& pair) {
  const double a = pair.alpha().gamma();
  const double b = pair.beta().gamma();
  return std::exp(std::lgamma(b + 1.0) - std::lgamma(a + 1.0) - std::lgamma(b - a));
}

double sonine_kernel(const SoninePair& pair, double x, double y) {
  if (x == 0.0 || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("sonine_kernel: x must be finite and nonzero");
  }
  if (std::abs(y) >= std::abs(x)) return 0.0;
  const double b = pair.beta().gamma();
  const double sgn = x > 0.0 ? 1.0 : -1.0;
  return sonine_const(pair) * sgn * (x + y) * std::pow(x * x - y * y, pair.kernel_exponent()) /
         std::pow(std::abs(x), 2.0 * b + 1.0);
}

double plancherel_const(Order gamma) {
  const double g = gamma.gamma();
  const double gam = std::tgamma(g + 1.0);
  return 1.0 / (std::exp2(2.0 * g + 2.0) * gam * gam);
}

}  // namespace dunkl
