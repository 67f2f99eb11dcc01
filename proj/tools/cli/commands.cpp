#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "dunkl/csv_io.hpp"
#include "dunkl/sonine.hpp"
#include "dunkl/sonine_inversion.hpp"
#include "dunkl/test_family.hpp"
#include "dunkl/transforms.hpp"
#include "dunkl/wavelets.hpp"

namespace dunkl::cli {
namespace {

SampledFunction load(const std::filesystem::path& path, GridPtr grid) {
  return bind_to_grid(read_sample_table(path), std::move(grid));
}

void write_field(const std::filesystem::path& path, const ScaleSpaceField& field) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  field.write_csv(out);
}

// quadrature orders doubled for golden files
Config oracle_config(Config cfg) {
  cfg.sonine_order *= 2;
  cfg.dual_order *= 2;
  cfg.translation_order *= 2;
  return cfg;
}

}  // namespace

const std::vector<std::string>& transform_kinds() {
  static const std::vector<std::string> kinds{"dunkl", "inverse-dunkl", "sonine", "dual-sonine", "dual-V", "cwt"};
  return kinds;
}

int cmd_verify(const std::string& suite, const Config& cfg, const std::optional<std::filesystem::path>& out_path,
               std::ostream& out, std::ostream& log) {
  const Report r = run_suite(suite, cfg);
  if (out_path) {
    write_report_files(*out_path, r);
  } else {
    write_json(out, r);
  }
  write_summary(log, r);
  return r.fail_count() == 0 ? 0 : 1;
}

int cmd_transform(const std::string& kind, const std::filesystem::path& in, const std::filesystem::path& out,
                  const Config& cfg) {
  const GridPtr xg = cfg.x_grid();
  const SoninePair pair(cfg.alpha, cfg.beta);
  if (kind == "dunkl") {
    const TransformPlan plan(xg, cfg.lambda_grid(), Order(cfg.gamma));
    write_sampled_function(out, plan.forward(load(in, xg)));
  } else if (kind == "inverse-dunkl") {
    const TransformPlan plan(xg, cfg.lambda_grid(), Order(cfg.gamma));
    write_sampled_function(out, plan.inverse(load(in, plan.target())));
  } else if (kind == "sonine") {
    const SonineRule rule(pair, cfg.sonine_order);
    write_sampled_function(out, sonine_transform(load(in, xg).as_function(), xg, rule));
  } else if (kind == "dual-sonine") {
    write_sampled_function(out, dual_sonine_transform(load(in, xg).as_function(), pair, xg, cfg.dual_options()));
  } else if (kind == "dual-V") {
    write_sampled_function(out, dual_intertwining_V(load(in, xg).as_function(), Order(cfg.gamma), xg,
                                                    cfg.dual_options()));
  } else if (kind == "cwt") {
    const TransformPlan plan(xg, cfg.lambda_grid(), Order(cfg.gamma));
    const WaveletSpec spec = WaveletSpec::from_profile(power_gaussian_profile(cfg.wavelet_power), plan);
    write_field(out, cwt(load(in, xg), spec, cfg.scale_grid(), plan));
  } else {
    throw std::invalid_argument("unknown transform kind '" + kind + "'");
  }
  return 0;
}

int cmd_invert(const std::filesystem::path& in, const std::filesystem::path& out,
               const std::optional<std::filesystem::path>& reference, const Config& cfg, std::ostream& log) {
  const SonineContext ctx(SoninePair(cfg.alpha, cfg.beta), cfg.x_grid(), cfg.lambda_grid(), cfg.sonine_order,
                          cfg.dual_options());
  const CalderonWindow window = cfg.window();
  const ScaleGrid scales = cfg.scale_grid();
  // fail on the window before the expensive parts
  scales.restrict_to(window);
  const SampledFunction h = load(in, ctx.x_grid());
  const DualSonineWavelet w = build_dual_sonine_wavelet(cfg.inversion_profile(), ctx);
  const SampledFunction rec = invert_dual_sonine(h, w, window, scales, ctx);
  write_sampled_function(out, rec);
  if (!reference) return 0;
  const SampledFunction f = load(*reference, ctx.x_grid());
  const double err = relative_l2_error(rec, f, ctx.pair().beta());
  const bool pass = err <= cfg.tol_inversion;
  log << "relative_l2_error " << err << "\ntolerance " << cfg.tol_inversion << "\n" << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 2;
}

int cmd_regen_golden(const std::filesystem::path& dir, const Config& cfg, std::ostream& log) {
  std::filesystem::create_directories(dir);
  const Config hi = oracle_config(cfg);
  const GridPtr xg = cfg.x_grid();
  const SoninePair pair(cfg.alpha, cfg.beta);
  const TestFunction g = gaussian();
  write_sampled_function(dir / "gaussian.csv", sample(g.f, xg));
  write_sampled_function(dir / "dual_sonine_golden.csv", dual_sonine_transform(g.f, pair, xg, hi.dual_options()));
  // round-trip pair: h = tX f and the reference f
  write_sampled_function(dir / "invert_h.csv", dual_sonine_transform(g.f, pair, xg, hi.dual_options()));
  write_sampled_function(dir / "invert_f.csv", sample(g.f, xg));
  log << "wrote gaussian.csv, dual_sonine_golden.csv, invert_h.csv, invert_f.csv to " << dir.string() << "\n";
  return 0;
}

}  // namespace dunkl::cli
