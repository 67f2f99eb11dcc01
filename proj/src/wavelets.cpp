#include "dunkl/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

// Relative tolerances of the admissibility check.
constexpr double kZeroAtOrigin = 1e-8;
constexpr double kHalfLineMismatch = 1e-10;
constexpr double kVanishing = 1e-14;

// Windows are compared against the scale-grid span with this slack.
constexpr double kSpanSlack = 1e-12;

void require_scale(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument(std::string(what) + ": scale must be positive");
}

void require_plan_source(const SampledFunction& f, const TransformPlan& plan, const char* what) {
  if (f.grid_ptr() != plan.source()) require_same_grid(f.grid(), *plan.source(), what);
}

SampledFunction spectrum_on(const WaveletSpec& spec, double a, const GridPtr& lambda_grid, bool conjugate) {
  std::vector<Complex> v(lambda_grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex s = spec.spectrum(a * lambda_grid->node(i));
    v[i] = conjugate ? std::conj(s) : s;
  }
  return SampledFunction(lambda_grid, std::move(v));
}

}  // namespace

SpectralProfile power_gaussian_profile(double p) {
  if (!(p >= 0.0)) throw std::invalid_argument("power_gaussian_profile: power must be >= 0");
  SpectralProfile out;
  out.name = "power_gaussian(" + std::to_string(p) + ")";
  out.value = [p](double lambda) {
    const double r = std::abs(lambda);
    if (p == 0.0) return std::exp(-0.5 * r * r);
    return std::pow(r, p) * std::exp(-0.5 * r * r);
  };
  out.eta = p;
  out.leading = 1.0;
  return out;
}

double admissibility_constant(const SampledFunction& spectrum) {
  const WeightedGrid& grid = spectrum.grid();
  if (!grid.symmetric() || !grid.splits_at_zero()) {
    throw std::invalid_argument("admissibility_constant: lambda-grid must be symmetric and split at 0");
  }
  double peak = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) peak = std::max(peak, std::abs(spectrum.value(i)));
  if (peak == 0.0) throw AdmissibilityError("admissibility integral vanishes: spectrum is zero");
  const double at_zero = std::abs(spectrum(0.0));
  if (at_zero > kZeroAtOrigin * peak) {
    throw AdmissibilityError("admissibility integral diverges: |F g(0)| = " + std::to_string(at_zero));
  }
  // Positive nodes ascending, negative nodes by mirror, so both sums run outward from 0.
  double plus = 0.0;
  double minus = 0.0;
  const std::size_t n = grid.size();
  for (std::size_t i = n / 2; i < n; ++i) {
    const double lambda = grid.node(i);
    if (!(lambda > 0.0)) continue;
    const double w = grid.weight(i) / lambda;
    plus += w * std::norm(spectrum.value(i));
    minus += w * std::norm(spectrum.value(grid.mirror(i)));
  }
  if (!(plus > kVanishing * peak * peak)) {
    throw AdmissibilityError("admissibility integral vanishes at working tolerance");
  }
  if (std::abs(plus - minus) > kHalfLineMismatch * std::max(plus, minus)) {
    throw AdmissibilityError("admissibility half-line integrals disagree: " + std::to_string(plus) + " vs " +
                             std::to_string(minus));
  }
  return plus;
}

WaveletSpec::WaveletSpec(SampledFunction generator, RealLineFunction spectrum, Order gamma, double eta,
                         const GridPtr& lambda_grid, double leading)
    : generator_(std::move(generator)),
      spectrum_(std::move(spectrum)),
      gamma_(gamma),
      eta_(eta),
      leading_(leading),
      admissibility_(0.0) {
  if (!spectrum_) throw std::invalid_argument("WaveletSpec: spectrum is not evaluable");
  if (!(eta >= 0.0)) throw std::invalid_argument("WaveletSpec: decay exponent must be >= 0");
  std::vector<Complex> v(lambda_grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = spectrum_(lambda_grid->node(i));
  const SampledFunction samples(lambda_grid, std::move(v));
  if (eta > 0.0) {
    double peak = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) peak = std::max(peak, std::abs(samples.value(i)));
    if (std::abs(spectrum_(0.0)) > kZeroAtOrigin * peak) {
      throw AdmissibilityError("WaveletSpec: spectrum must vanish at 0 for positive decay exponent");
    }
  }
  admissibility_ = admissibility_constant(samples);
}

WaveletSpec WaveletSpec::from_profile(const SpectralProfile& profile, const TransformPlan& plan) {
  if (!profile.value) throw std::invalid_argument("from_profile: profile is not evaluable");
  const auto p = profile.value;
  RealLineFunction spectrum = [p](double lambda) { return Complex{p(lambda), 0.0}; };
  SampledFunction g = plan.inverse(sample(spectrum, plan.target()));
  return WaveletSpec(std::move(g), std::move(spectrum), plan.order(), profile.eta, plan.target(), profile.leading);
}

CalderonWindow::CalderonWindow(double eps, double delta) : eps_(eps), delta_(delta) {
  if (!(eps > 0.0) || !std::isfinite(delta) || !(delta >= eps)) {
    throw std::invalid_argument("CalderonWindow: need 0 < eps <= delta < inf");
  }
}

ScaleGrid::ScaleGrid(Rule rule, double lo, double hi, int density, int order)
    : rule_(rule), lo_(lo), hi_(hi), density_(density), order_(order) {
  if (!(lo > 0.0) || !std::isfinite(hi) || !(hi >= lo)) throw std::invalid_argument("ScaleGrid: need 0 < lo <= hi");
  if (density < 1 || order < 1) throw std::invalid_argument("ScaleGrid: bad density or order");
  if (hi == lo) return;
  const double span = std::log(hi / lo);
  const double decades = std::log10(hi / lo);
  const int intervals = std::max(1, static_cast<int>(std::ceil(density * decades - 1e-9)));
  const double h = span / intervals;
  if (rule == Rule::kLogTrapezoid) {
    for (int k = 0; k <= intervals; ++k) {
      scales_.push_back(k == intervals ? hi : lo * std::exp(k * h));
      weights_.push_back(k == 0 || k == intervals ? 0.5 * h : h);
    }
    return;
  }
  const QuadratureRule gl = gauss_legendre(order);
  for (int k = 0; k < intervals; ++k) {
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double s = (k + 0.5 * (1.0 + gl.nodes[i])) * h;
      scales_.push_back(lo * std::exp(s));
      weights_.push_back(0.5 * h * gl.weights[i]);
    }
  }
}

ScaleGrid ScaleGrid::log_uniform(double lo, double hi, int per_decade) {
  return ScaleGrid(Rule::kLogTrapezoid, lo, hi, per_decade, 1);
}

ScaleGrid ScaleGrid::log_gauss(double lo, double hi, int panels_per_decade, int order) {
  return ScaleGrid(Rule::kLogGauss, lo, hi, panels_per_decade, order);
}

ScaleGrid ScaleGrid::restrict_to(const CalderonWindow& window) const {
  if (window.eps() < lo_ * (1.0 - kSpanSlack) || window.delta() > hi_ * (1.0 + kSpanSlack)) {
    throw PreconditionError("window [" + std::to_string(window.eps()) + ", " + std::to_string(window.delta()) +
                            "] lies outside the scale grid span [" + std::to_string(lo_) + ", " +
                            std::to_string(hi_) + "]");
  }
  return ScaleGrid(rule_, window.eps(), window.delta(), density_, order_);
}

ScaleSpaceField::ScaleSpaceField(ScaleGrid scales, GridPtr b_grid)
    : scales_(std::move(scales)), b_grid_(std::move(b_grid)), values_(scales_.size() * b_grid_->size()) {}

SampledFunction ScaleSpaceField::row(std::size_t scale) const {
  const std::size_t n = b_grid_->size();
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>(scale * n);
  return SampledFunction(b_grid_, std::vector<Complex>(first, first + static_cast<std::ptrdiff_t>(n)));
}

void ScaleSpaceField::set_row(std::size_t scale, const SampledFunction& f) {
  require_same_grid(f.grid(), *b_grid_, "ScaleSpaceField::set_row");
  std::copy(f.values().begin(), f.values().end(), values_.begin() + static_cast<std::ptrdiff_t>(scale * b_grid_->size()));
}

void ScaleSpaceField::write_csv(std::ostream& out) const {
  out << "a,b,re,im\n" << std::setprecision(17);
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    for (std::size_t j = 0; j < b_grid_->size(); ++j) {
      const Complex v = at(i, j);
      out << scales_.scales()[i] << ',' << b_grid_->node(j) << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
}

RealLineFunction dilate(RealLineFunction g, double a) {
  require_scale(a, "dilate");
  if (!g) throw std::invalid_argument("dilate: function is not evaluable");
  if (a == 1.0) return g;
  return [g = std::move(g), a](double x) { return g(x / a); };
}

SampledFunction dilate(const SampledFunction& g, double a) {
  require_scale(a, "dilate");
  if (a == 1.0) return g;
  std::vector<Complex> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(g.grid().node(i) / a);
  return SampledFunction(g.grid_ptr(), std::move(v));
}

RealLineFunction wavelet_atom(const WaveletSpec& spec, double a, double b, const TranslationRule& rule) {
  require_scale(a, "wavelet_atom");
  const double norm = std::pow(a, -(2.0 * spec.order().gamma() + 2.0));
  RealLineFunction ga = dilate(spec.generator().as_function(), a);
  return [ga = std::move(ga), norm, b, rule](double x) { return norm * translate(ga, -b, x, rule); };
}

SampledFunction cwt_row(const SampledFunction& f, const WaveletSpec& spec, double a, const TransformPlan& plan) {
  require_scale(a, "cwt");
  require_plan_source(f, plan, "cwt");
  const SampledFunction ff = plan.forward(f);
  std::vector<Complex> prod(ff.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ff.value(i) * std::conj(spec.spectrum(a * ff.grid().node(i)));
  return plan.inverse(SampledFunction(plan.target(), std::move(prod)));
}

ScaleSpaceField cwt(const SampledFunction& f, const WaveletSpec& spec, const ScaleGrid& scales,
                    const TransformPlan& plan) {
  require_plan_source(f, plan, "cwt");
  ScaleSpaceField field(scales, plan.source());
  const SampledFunction ff = plan.forward(f);
  const long ns = static_cast<long>(scales.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    const double a = scales.scales()[k];
    SampledFunction prod = spectrum_on(spec, a, plan.target(), true);
    std::vector<Complex> v(prod.values().begin(), prod.values().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= ff.value(i);
    field.set_row(static_cast<std::size_t>(k), plan.inverse(SampledFunction(plan.target(), std::move(v))));
  }
  return field;
}

Complex cwt_inner_product(const SampledFunction& f, const WaveletSpec& spec, double a, double b,
                          const TranslationRule& rule) {
  const RealLineFunction atom = wavelet_atom(spec, a, b, rule);
  const WeightedGrid& grid = f.grid();
  const double e = spec.order().weight_exponent();
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (f.value(i) == Complex{0.0, 0.0}) continue;
    const double x = grid.node(i);
    acc += grid.weight(i) * std::pow(std::abs(x), e) * f.value(i) * std::conj(atom(x));
  }
  return acc;
}

double calderon_K(const WaveletSpec& spec, const ScaleGrid& scales, double lambda) {
  double acc = 0.0;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    acc += scales.weights()[k] * std::norm(spec.spectrum(scales.scales()[k] * lambda));
  }
  return acc / spec.admissibility();
}

double calderon_K(const WaveletSpec& spec, const CalderonWindow& window, double lambda) {
  if (window.empty()) return 0.0;
  return calderon_K(spec, ScaleGrid::log_gauss(window.eps(), window.delta(), 8, 16), lambda);
}

SampledFunction calderon_G_spectrum(const WaveletSpec& spec, const ScaleGrid& scales, const TransformPlan& plan) {
  const SampledFunction& g = spec.generator();
  require_plan_source(g, plan, "calderon_G");
  if (!g.grid().symmetric()) throw std::invalid_argument("calderon_G: symmetric x-grid required");
  const double c = spec.admissibility();
  const double power = -(4.0 * spec.order().gamma() + 4.0);
  const std::size_t nl = plan.target()->size();
  const long ns = static_cast<long>(scales.size());
  std::vector<std::vector<Complex>> parts(scales.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    const double a = scales.scales()[k];
    const SampledFunction ga = dilate(g, a);
    std::vector<Complex> tv(ga.size());
    bool same = true;
    for (std::size_t i = 0; i < tv.size(); ++i) {
      tv[i] = std::conj(ga.value(g.grid().mirror(i)));
      same = same && tv[i] == ga.value(i);
    }
    const SampledFunction fa = plan.forward(ga);
    const SampledFunction ft = same ? fa : plan.forward(SampledFunction(g.grid_ptr(), std::move(tv)));
    const double scale = scales.weights()[k] * std::pow(a, power);
    std::vector<Complex> p(nl);
    for (std::size_t i = 0; i < nl; ++i) p[i] = scale * fa.value(i) * ft.value(i);
    parts[k] = std::move(p);
  }
  // ascending scale order regardless of scheduling
  std::vector<Complex> sum(nl, Complex{0.0, 0.0});
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < nl; ++i) sum[i] += p[i];
  }
  for (auto& v : sum) v /= c;
  return SampledFunction(plan.target(), std::move(sum));
}

SampledFunction calderon_G(const WaveletSpec& spec, const ScaleGrid& scales, const TransformPlan& plan) {
  return plan.inverse(calderon_G_spectrum(spec, scales, plan));
}

SampledFunction synthesize(const ScaleSpaceField& field, const WaveletSpec& spec, const TransformPlan& plan) {
  require_same_grid(*field.b_grid(), *plan.source(), "synthesize");
  const ScaleGrid& scales = field.scales();
  const std::size_t nl = plan.target()->size();
  const long ns = static_cast<long>(scales.size());
  std::vector<std::vector<Complex>> parts(scales.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < ns; ++k) {
    const double a = scales.scales()[k];
    const SampledFunction fphi = plan.forward(field.row(static_cast<std::size_t>(k)));
    std::vector<Complex> p(nl);
    for (std::size_t i = 0; i < nl; ++i) {
      p[i] = scales.weights()[k] * spec.spectrum(a * plan.target()->node(i)) * fphi.value(i);
    }
    parts[k] = std::move(p);
  }
  std::vector<Complex> sum(nl, Complex{0.0, 0.0});
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < nl; ++i) sum[i] += p[i];
  }
  for (auto& v : sum) v /= spec.admissibility();
  return plan.inverse(SampledFunction(plan.target(), std::move(sum)));
}

Complex synthesize_at(const ScaleSpaceField& field, const WaveletSpec& spec, double x, const TranslationRule& rule) {
  const ScaleGrid& scales = field.scales();
  const WeightedGrid& bg = *field.b_grid();
  const double e = spec.order().weight_exponent();
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < scales.size(); ++k) {
    Complex inner{0.0, 0.0};
    for (std::size_t j = 0; j < bg.size(); ++j) {
      const Complex phi = field.at(k, j);
      if (phi == Complex{0.0, 0.0}) continue;
      const double b = bg.node(j);
      inner += bg.weight(j) * std::pow(std::abs(b), e) * phi * wavelet_atom(spec, scales.scales()[k], b, rule)(x);
    }
    acc += scales.weights()[k] * inner;
  }
  return acc / spec.admissibility();
}

SampledFunction calderon_reconstruct(const SampledFunction& f, const WaveletSpec& spec, const CalderonWindow& window,
                                     const ScaleGrid& a_grid, const TransformPlan& plan, CalderonPath path) {
  require_plan_source(f, plan, "calderon_reconstruct");
  const ScaleGrid scales = a_grid.restrict_to(window);
  if (scales.size() == 0) return zero_function(f.grid_ptr());
  if (path == CalderonPath::kConvolution) {
    const SampledFunction ff = plan.forward(f);
    const SampledFunction fg = calderon_G_spectrum(spec, scales, plan);
    std::vector<Complex> prod(ff.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ff.value(i) * fg.value(i);
    return plan.inverse(SampledFunction(plan.target(), std::move(prod)));
  }
  return synthesize(cwt(f, spec, scales, plan), spec, plan);
}

SampledFunction pointwise_inverse(const SampledFunction& f, const WaveletSpec& spec, const ScaleGrid& a_grid,
                                  const TransformPlan& plan) {
  return calderon_reconstruct(f, spec, CalderonWindow(a_grid.lo(), a_grid.hi()), a_grid, plan,
                              CalderonPath::kDoubleIntegral);
}

}  // namespace dunkl
