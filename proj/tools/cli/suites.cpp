#include "cli/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cli/suite_common.hpp"

namespace dunkl::cli {

const TransformPlan& cached_plan(const GridPtr& x_grid, const GridPtr& lambda_grid, double gamma) {
  using Key = std::tuple<const WeightedGrid*, const WeightedGrid*, double>;
  static std::map<Key, std::unique_ptr<TransformPlan>> cache;
  const Key key{x_grid.get(), lambda_grid.get(), gamma};
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<TransformPlan>(x_grid, lambda_grid, Order(gamma))).first;
  }
  return *it->second;
}

GridPtr cached_grid(double radius, int panels, int order) {
  using Key = std::tuple<double, int, int>;
  static std::map<Key, GridPtr> cache;
  const Key key{radius, panels, order};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_grid(radius, panels, order)).first;
  return it->second;
}

GridPtr default_x_grid(const Config& cfg) { return cached_grid(cfg.grid_radius, cfg.grid_panels, cfg.grid_order); }

GridPtr default_lambda_grid(const Config& cfg) {
  if (cfg.lambda_radius <= 0.0) return default_x_grid(cfg);
  return cached_grid(cfg.lambda_radius, cfg.lambda_panels > 0 ? cfg.lambda_panels : cfg.grid_panels, cfg.grid_order);
}

GridPtr wide_x_grid(const Config& cfg) { return cached_grid(cfg.wide_radius, cfg.wide_panels, cfg.grid_order); }

GridPtr wide_lambda_grid(const Config& cfg) {
  return cached_grid(cfg.wide_lambda_radius, cfg.wide_lambda_panels, cfg.grid_order);
}

std::string order_tag(double gamma) {
  std::ostringstream s;
  s << 'g' << gamma;
  return s.str();
}

double relative_max_error(const SampledFunction& a, const SampledFunction& b, double limit) {
  require_same_grid(a.grid(), b.grid(), "relative_max_error");
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.grid().node(i)) > limit) continue;
    err = std::max(err, std::abs(a.value(i) - b.value(i)));
    scale = std::max(scale, std::abs(b.value(i)));
  }
  return scale > 0.0 ? err / scale : err;
}

SampledFunction pointwise_product(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise_product");
  std::vector<Complex> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.value(i) * b.value(i);
  return SampledFunction(a.grid_ptr(), std::move(v));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"plancherel", "translation", "convolution", "sonine",
                                              "wavelet",    "calderon",    "inversion"};
  return names;
}

const std::vector<GroupEntry>& suite_groups(const std::string& suite) {
  static const std::map<std::string, std::vector<GroupEntry>> table{
      {"plancherel", transform_plancherel_groups()}, {"translation", translation_groups()},
      {"convolution", convolution_groups()},         {"sonine", sonine_groups()},
      {"wavelet", wavelet_groups()},                 {"calderon", calderon_groups()},
      {"inversion", inversion_groups()}};
  const auto it = table.find(suite);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

std::vector<Check> run_group(const std::string& suite, const std::string& group, const Config& cfg) {
  for (const auto& g : suite_groups(suite)) {
    if (g.name == group) return g.run(cfg);
  }
  throw std::invalid_argument("unknown check group '" + suite + "." + group + "'");
}

Report run_suite(const std::string& suite, const Config& cfg) {
  Report r;
  r.suite = suite;
  if (suite == "all") {
    for (const auto& name : suite_names()) r.append(run_suite(name, cfg));
  } else {
    for (const auto& g : suite_groups(suite)) {
      auto checks = g.run(cfg);
      r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    }
  }
  r.sort();
  return r;
}

}  // namespace dunkl::cli
