#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace dunkl::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ConfigError(key + ": not a number: '" + v + "'");
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

struct Field {
  std::function<void(Config&, const std::string&)> set;
  std::function<std::string(const Config&)> get;
};

template <typename T>
Field field(T Config::*member) {
  Field f;
  f.set = [member](Config& c, const std::string& v) {
    if constexpr (std::is_same_v<T, int>) {
      c.*member = to_int("value", v);
    } else if constexpr (std::is_same_v<T, double>) {
      c.*member = to_double("value", v);
    } else {
      c.*member = v;
    }
  };
  f.get = [member](const Config& c) {
    if constexpr (std::is_same_v<T, std::string>) {
      return c.*member;
    } else {
      return fmt(static_cast<double>(c.*member));
    }
  };
  return f;
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    t["gammas"] = Field{[](Config& c, const std::string& v) {
                          c.gammas.clear();
                          std::istringstream ss(v);
                          std::string item;
                          while (std::getline(ss, item, ',')) c.gammas.push_back(to_double("gammas", trim(item)));
                          if (c.gammas.empty()) throw ConfigError("gammas: empty list");
                        },
                        [](const Config& c) {
                          std::string s;
                          for (std::size_t i = 0; i < c.gammas.size(); ++i) s += (i ? "," : "") + fmt(c.gammas[i]);
                          return s;
                        }};
    t["gamma"] = field(&Config::gamma);
    t["grid.radius"] = field(&Config::grid_radius);
    t["grid.panels"] = field(&Config::grid_panels);
    t["grid.order"] = field(&Config::grid_order);
    t["lambda.radius"] = field(&Config::lambda_radius);
    t["lambda.panels"] = field(&Config::lambda_panels);
    t["wide.radius"] = field(&Config::wide_radius);
    t["wide.panels"] = field(&Config::wide_panels);
    t["wide.lambda_radius"] = field(&Config::wide_lambda_radius);
    t["wide.lambda_panels"] = field(&Config::wide_lambda_panels);
    t["alpha"] = field(&Config::alpha);
    t["beta"] = field(&Config::beta);
    t["translation.order"] = field(&Config::translation_order);
    t["sonine.order"] = field(&Config::sonine_order);
    t["dual.panel_width"] = field(&Config::dual_panel_width);
    t["dual.order"] = field(&Config::dual_order);
    t["wavelet.power"] = field(&Config::wavelet_power);
    t["profile"] = field(&Config::profile);
    t["profile.power"] = field(&Config::profile_power);
    t["scales.lo"] = field(&Config::scales_lo);
    t["scales.hi"] = field(&Config::scales_hi);
    t["scales.per_decade"] = field(&Config::scales_per_decade);
    t["window.eps"] = field(&Config::window_eps);
    t["window.delta"] = field(&Config::window_delta);
    t["tol.plancherel"] = field(&Config::tol_plancherel);
    t["tol.roundtrip"] = field(&Config::tol_roundtrip);
    t["tol.eigen"] = field(&Config::tol_eigen);
    t["tol.product"] = field(&Config::tol_product);
    t["tol.printed_sign"] = field(&Config::tol_printed_sign);
    t["tol.sonine_kernel"] = field(&Config::tol_sonine_kernel);
    t["tol.transmutation"] = field(&Config::tol_transmutation);
    t["tol.duality"] = field(&Config::tol_duality);
    t["tol.mixed"] = field(&Config::tol_mixed);
    t["tol.intertwining"] = field(&Config::tol_intertwining);
    t["tol.kernel_spectrum"] = field(&Config::tol_kernel_spectrum);
    t["tol.calderon"] = field(&Config::tol_calderon);
    t["tol.transported_spectrum"] = field(&Config::tol_transported_spectrum);
    t["tol.commutation"] = field(&Config::tol_commutation);
    t["tol.inversion"] = field(&Config::tol_inversion);
    return t;
  }();
  return table;
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end()) throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    try {
      it->second.set(cfg, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + key + ": " + e.what());
    }
    cfg.present.insert(key);
  }
  if (cfg.present.count("profile") && cfg.profile != "power_gaussian") {
    throw ConfigError("unknown profile '" + cfg.profile + "' (supported: power_gaussian)");
  }
  if (cfg.present.count("profile") && !cfg.present.count("profile.power")) {
    throw ConfigError("profile power_gaussian needs profile.power");
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string describe(const Config& cfg) {
  std::string out;
  for (const auto& [key, f] : fields()) out += key + " = " + f.get(cfg) + "\n";
  return out;
}

GridPtr Config::x_grid() const { return make_grid(grid_radius, grid_panels, grid_order); }

GridPtr Config::lambda_grid() const {
  if (lambda_radius <= 0.0) return x_grid();
  return make_grid(lambda_radius, lambda_panels > 0 ? lambda_panels : grid_panels, grid_order);
}

GridPtr Config::wide_x_grid() const { return make_grid(wide_radius, wide_panels, grid_order); }

GridPtr Config::wide_lambda_grid() const { return make_grid(wide_lambda_radius, wide_lambda_panels, grid_order); }

DualOptions Config::dual_options() const {
  DualOptions o;
  o.panel_width = dual_panel_width;
  o.order = dual_order;
  return o;
}

SpectralProfile Config::inversion_profile() const { return power_gaussian_profile(profile_power); }

ScaleGrid Config::scale_grid() const { return ScaleGrid::log_uniform(scales_lo, scales_hi, scales_per_decade); }

CalderonWindow Config::window() const { return CalderonWindow(window_eps, window_delta); }

}  // namespace dunkl::cli
