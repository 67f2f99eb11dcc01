#pragma once

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/sonine.hpp"
#include "dunkl/wavelets.hpp"

namespace dunkl::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` settings; `#` starts a comment. Defaults reproduce the
/// acceptance runs.
struct Config {
  std::vector<double> gammas{0.0, 0.5, 1.2};
  double gamma = 0.5;

  double grid_radius = 16.0;
  int grid_panels = 64;
  int grid_order = 16;
  // 0 means the lambda-grid equals the x-grid
  double lambda_radius = 0.0;
  int lambda_panels = 0;

  // grids for the scale-window checks, which need g(x/delta) inside the x-grid
  double wide_radius = 96.0;
  int wide_panels = 384;
  double wide_lambda_radius = 12.0;
  int wide_lambda_panels = 288;

  double alpha = 0.5;
  double beta = 1.5;
  int translation_order = 40;
  int sonine_order = 32;
  double dual_panel_width = 0.5;
  int dual_order = 16;

  double wavelet_power = 2.0;
  std::string profile = "power_gaussian";
  double profile_power = 4.0;

  double scales_lo = 0.01;
  double scales_hi = 100.0;
  int scales_per_decade = 64;
  double window_eps = 0.1;
  double window_delta = 16.0;

  double tol_plancherel = 1e-6;
  double tol_roundtrip = 1e-8;
  double tol_eigen = 1e-6;
  double tol_product = 1e-8;
  double tol_printed_sign = 0.1;
  double tol_sonine_kernel = 1e-6;
  double tol_transmutation = 1e-6;
  double tol_duality = 1e-6;
  double tol_mixed = 1e-5;
  double tol_intertwining = 1e-5;
  double tol_kernel_spectrum = 1e-6;
  double tol_calderon = 1e-2;
  double tol_transported_spectrum = 1e-5;
  double tol_commutation = 1e-5;
  double tol_inversion = 5e-2;

  // keys read from the file, for "parameter required" checks
  std::set<std::string> present;

  GridPtr x_grid() const;
  GridPtr lambda_grid() const;
  GridPtr wide_x_grid() const;
  GridPtr wide_lambda_grid() const;
  DualOptions dual_options() const;
  SpectralProfile inversion_profile() const;
  ScaleGrid scale_grid() const;
  CalderonWindow window() const;
};

Config load_config(const std::filesystem::path& path);
Config parse_config(const std::string& text);

/// Every accepted key with its current value, one `key = value` per line.
std::string describe(const Config& cfg);

}  // namespace dunkl::cli
