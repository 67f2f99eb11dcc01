#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "dunkl/transforms.hpp"

namespace dunkl::cli {

/// Transform plan shared by all checks of a run with the same grids and order.
const TransformPlan& cached_plan(const GridPtr& x_grid, const GridPtr& lambda_grid, double gamma);

/// Grids by parameters, built once.
GridPtr cached_grid(double radius, int panels, int order);

GridPtr default_x_grid(const Config& cfg);
GridPtr default_lambda_grid(const Config& cfg);
GridPtr wide_x_grid(const Config& cfg);
GridPtr wide_lambda_grid(const Config& cfg);

/// Short label for an order in check ids: 0.5 -> "g0.5".
std::string order_tag(double gamma);

/// Max |a - b| over nodes with |x| <= limit, relative to max |b| there.
double relative_max_error(const SampledFunction& a, const SampledFunction& b, double limit);

/// a(x) b(x) on a shared grid.
SampledFunction pointwise_product(const SampledFunction& a, const SampledFunction& b);

std::vector<GroupEntry> transform_plancherel_groups();
std::vector<GroupEntry> translation_groups();
std::vector<GroupEntry> convolution_groups();
std::vector<GroupEntry> sonine_groups();
std::vector<GroupEntry> wavelet_groups();
std::vector<GroupEntry> calderon_groups();
std::vector<GroupEntry> inversion_groups();

}  // namespace dunkl::cli
