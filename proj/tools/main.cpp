#include <exception>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/suites.hpp"
#include "dunkl/threads.hpp"

int main(int argc, char** argv) {
  using namespace dunkl::cli;
  CLI::App app{"Dunkl harmonic analysis and dual Sonine inversion"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_path;
  bool regen = false;
  app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_flag("--regen-golden", regen, "regenerate test fixtures with doubled quadrature orders");
  app.add_option("--out", out_path, "output directory for --regen-golden")->default_str("tests/fixtures");

  std::string suite;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
  verify->add_option("--out", report_path, "JSON report path; a .csv is written beside it");

  std::string kind;
  std::string in_path;
  std::string result_path;
  auto* transform = app.add_subcommand("transform", "apply an operator to sampled data");
  transform->add_option("kind", kind, "operator")->required()->check(CLI::IsMember(transform_kinds()));
  transform->add_option("input", in_path, "input CSV x,re,im")->required();
  transform->add_option("output", result_path, "output CSV")->required();
  transform->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);

  std::string reference;
  auto* invert = app.add_subcommand("invert", "recover f from its dual Sonine transform");
  invert->add_option("input", in_path, "CSV of h")->required();
  invert->add_option("output", result_path, "CSV of the reconstruction")->required();
  invert->add_option("--reference", reference, "CSV of the true f, enables the error summary");
  invert->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    dunkl::configure_threads_from_env();
    const Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    if (regen) return cmd_regen_golden(out_path.empty() ? "tests/fixtures" : out_path, cfg, std::cerr);
    if (*verify) {
      std::optional<std::filesystem::path> out;
      if (!report_path.empty()) out = report_path;
      return cmd_verify(suite, cfg, out, std::cout, std::cerr);
    }
    if (*transform) return cmd_transform(kind, in_path, result_path, cfg);
    if (*invert) {
      std::optional<std::filesystem::path> ref;
      if (!reference.empty()) ref = reference;
      return cmd_invert(in_path, result_path, ref, cfg, std::cout);
    }
    std::cerr << app.help();
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
